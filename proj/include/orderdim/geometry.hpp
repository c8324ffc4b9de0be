#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "orderdim/extend.hpp"
#include "orderdim/realize.hpp"
#include "orderdim/relation.hpp"

namespace orderdim {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q" in lowest terms, so integers print as "3/1".
std::string to_string(const Rational& x);
Rational rational_from_string(std::string_view text);

struct OpenInterval {
  Rational left;
  Rational right;

  bool operator==(const OpenInterval&) const = default;
};

/// Touching intervals count as ordered.
inline bool precedes(const OpenInterval& a, const OpenInterval& b) { return a.right <= b.left; }

enum class RepKind { Interval, UnitInterval, Triangle, UnitTriangle, Box };

std::string_view to_string(RepKind k);

/// Per-element geometry for the relation `source` (the relation the
/// representation is equivalent to, always transitively closed).
struct GeometricRep {
  RepKind kind = RepKind::Interval;
  Relation source;
  /// Triangle kinds only.
  std::vector<Rational> apex;
  /// One interval per element for every kind except Box, which has one per coordinate.
  std::vector<std::vector<OpenInterval>> intervals;
};

GeometricRep interval_representation(const Relation& q);
GeometricRep unit_interval_representation(const Relation& s);
GeometricRep triangle_representation(const Relation& r, PartnerClass partner, const DecomposeOptions& opts = {});
GeometricRep triangle_representation(const Relation& r, const Decomposition& d);
GeometricRep box_embedding(const Relation& r, const Realizer& realizer);

/// Re-checks the defining equivalence of the kind against rep.source, plus
/// the shape invariants (left < right, unit lengths).
bool verify_representation(const GeometricRep& rep);

enum class ProductMode { Strict, Componentwise };

inline constexpr std::size_t kDefaultTupleCap = 4096;

/// Ground set: all label tuples "(x,y,...)" in lexicographic index order.
Relation product_relation(std::span<const Relation> family, ProductMode mode,
                          std::size_t cap = kDefaultTupleCap);

/// Tuple coordinates of product element t (index digits, first coordinate most significant).
std::vector<Index> tuple_coordinates(std::span<const Relation> family, Index t);
Index tuple_index(std::span<const Relation> family, std::span<const Index> coords);

/// The reflexive linear order on tuples that compares coordinate i first
/// and breaks ties by the reversed order at the first differing coordinate.
/// `i` is 0-based.
Relation product_linearization(std::span<const Relation> family, std::size_t i,
                               std::size_t cap = kDefaultTupleCap);

}  // namespace orderdim
