#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderdim/classify.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/extend.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/realize.hpp"
#include "orderdim/relation.hpp"

namespace orderdim {

enum class OutputFormat { Json, Dot, Svg, Edgelist };
enum class InputFormat { Auto, Json, Edgelist };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> output_format_from_string(std::string_view name);

struct RelationDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::optional<std::string> name;

  bool operator==(const RelationDocument&) const = default;
};

/// Auto picks JSON when the first non-blank character is '{'.
/// Errors: ParseError (message carries line and column), DuplicateElement,
/// UnknownElement when an `#elements:` header does not list a pair label.
RelationDocument parse_document(std::string_view text, InputFormat format = InputFormat::Auto);
Relation to_relation(const RelationDocument& doc);
RelationDocument to_document(const Relation& r, std::optional<std::string> name = std::nullopt);
Relation parse_relation(std::string_view text, InputFormat format = InputFormat::Auto);

std::string emit(const RelationDocument& doc, OutputFormat format);
std::string emit(const Relation& r, OutputFormat format);
std::string emit(const Witness& w, OutputFormat format);
std::string emit(const ClassReport& report, OutputFormat format);
std::string emit(const Decomposition& d, OutputFormat format);
std::string emit(const Realizer& z, OutputFormat format);
std::string emit(const DimCertificate& cert, OutputFormat format);
std::string emit(const GeometricRep& rep, OutputFormat format);

}  // namespace orderdim
