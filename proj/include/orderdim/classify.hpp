#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "orderdim/relation.hpp"

namespace orderdim {

enum class Property {
  Irreflexive,
  Reflexive,
  Transitive,
  Antisymmetric,
  Asymmetric,
  Total,
  Acyclic,
  TransitivelyAntisymmetric,
  StrictPartialOrder,
  PartialOrder,
  StrictLinearOrder,
  LinearOrder,
  IntervalOrder,
  Semiorder,
  StrongIntervalOrder,
};

inline constexpr Property kAllProperties[] = {
    Property::Irreflexive,        Property::Reflexive,
    Property::Transitive,         Property::Antisymmetric,
    Property::Asymmetric,         Property::Total,
    Property::Acyclic,            Property::TransitivelyAntisymmetric,
    Property::StrictPartialOrder, Property::PartialOrder,
    Property::StrictLinearOrder,  Property::LinearOrder,
    Property::IntervalOrder,      Property::Semiorder,
    Property::StrongIntervalOrder,
};

/// snake_case flag name used in reports ("interval_order", ...).
std::string_view to_string(Property p);

struct ClassReport {
  bool irreflexive = false;
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool asymmetric = false;
  bool total = false;
  bool acyclic = false;
  bool transitively_antisymmetric = false;
  bool strict_partial_order = false;
  bool partial_order = false;
  bool strict_linear_order = false;
  bool linear_order = false;
  bool interval_order = false;
  bool semiorder = false;
  bool strong_interval_order = false;

  /// Certificates for failed flags where a forbidden pattern applies.
  std::map<Property, Witness> witnesses;

  bool flag(Property p) const;
};

/// ((x,y),(a,b)) with (x,a),(b,y) in R, (b,a) not in closure(R), (x,y) not in R.
struct IntervalViolation {
  Index x, y, a, b;
  auto operator<=>(const IntervalViolation&) const = default;
};

/// (x,y,z,w) with (x,y),(y,z) in R, (x,w),(w,z) not in R and w outside {x,y,z}.
struct SemiorderViolation {
  Index x, y, z, w;
  auto operator<=>(const SemiorderViolation&) const = default;
};

ClassReport classify(const Relation& r);

/// The negative interval order assumption set, in lexicographic element order.
std::vector<IntervalViolation> interval_violations(const Relation& r);
std::optional<IntervalViolation> first_interval_violation(const Relation& r);

std::vector<SemiorderViolation> semiorder_violations(const Relation& r);
std::optional<SemiorderViolation> first_semiorder_violation(const Relation& r);

Witness to_witness(const Relation& r, const IntervalViolation& v);
Witness to_witness(const Relation& r, const SemiorderViolation& v);

// Single-flag shortcuts. Each agrees with the matching classify() flag.
bool is_transitive(const Relation& r);
bool is_irreflexive(const Relation& r);
bool is_strict_linear_order(const Relation& r);
bool is_linear_order(const Relation& r);
bool is_interval_order(const Relation& r);
bool is_semiorder(const Relation& r);
bool is_strong_interval_order(const Relation& r);

}  // namespace orderdim
