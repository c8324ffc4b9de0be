#pragma once

#include <json.hpp>

#include "orderdim/io.hpp"

namespace orderdim::detail {

using Json = nlohmann::json;

Json to_json(const Relation& r, const std::optional<std::string>& name = std::nullopt);
Json to_json(const RelationDocument& doc);
Json to_json(const Witness& w);
Json to_json(const ClassReport& report);
Json to_json(const Decomposition& d);
Json to_json(const Realizer& z);
Json to_json(const DimCertificate& cert);
Json to_json(const GeometricRep& rep);

RelationDocument document_from_json(const Json& j);
Witness witness_from_json(const Json& j);

/// Keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);

[[noreturn]] void unsupported(std::string_view what, OutputFormat format);

}  // namespace orderdim::detail
