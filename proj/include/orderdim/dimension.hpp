#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "orderdim/extend.hpp"
#include "orderdim/realize.hpp"

namespace orderdim {

enum class Quantity { Dim, IntervalDim, SemiorderDim, LinearIntervalDim, LinearSemiorderDim };

std::string_view to_string(Quantity q);
std::optional<Quantity> quantity_from_string(std::string_view name);

/// Scalar values leave q empty; lidim/lsdim report (p, q) with q members
/// that are not strict linear orders.
struct DimValue {
  std::size_t p = 0;
  std::optional<std::size_t> q;

  bool operator==(const DimValue&) const = default;
  /// Lexicographic, scalar values compare as (p, 0).
  bool operator<(const DimValue& o) const;
  std::string display() const;
};

struct DimCertificate {
  Quantity quantity = Quantity::Dim;
  DimValue value;
  Realizer witness;
  bool exhaustive = true;
  std::uint64_t budget_used = 0;
};

struct DimOptions {
  std::size_t max_n_linear = 8;
  std::size_t max_n_pool = 6;
  /// Limit on candidate pool size plus cover-search nodes.
  std::uint64_t budget = 50'000'000;
};

DimCertificate order_dim(const Relation& r, const DimOptions& opts = {});
DimCertificate interval_dim(const Relation& r, const DimOptions& opts = {});
DimCertificate semiorder_dim(const Relation& r, const DimOptions& opts = {});
DimCertificate hybrid_dim(const Relation& r, PartnerClass partner, const DimOptions& opts = {});
DimCertificate dimension(const Relation& r, Quantity q, const DimOptions& opts = {});

/// Re-checks the witness realizer and that its shape matches the value.
bool verify_certificate(const Relation& r, const DimCertificate& cert);

}  // namespace orderdim
