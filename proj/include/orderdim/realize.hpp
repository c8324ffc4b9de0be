#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orderdim/extend.hpp"
#include "orderdim/relation.hpp"

namespace orderdim {

enum class MemberClass {
  StrictLinear,
  Linear,
  IntervalOrder,
  StrongInterval,
  Semiorder,
  LinearInterval,
  LinearSemiorder,
};

std::string_view to_string(MemberClass c);
std::optional<MemberClass> member_class_from_string(std::string_view name);

/// Linear and StrongInterval members are reflexive; every other class is strict.
bool is_reflexive_class(MemberClass c);
bool is_hybrid_class(MemberClass c);

/// Membership test for a single member. Hybrid classes accept a relation
/// iff it is a strict partial order with a verified decomposition.
bool member_in_class(const Relation& m, MemberClass cls, const DecomposeOptions& opts = {});

struct Realizer {
  Relation target;
  std::vector<Relation> members;
  MemberClass member_class = MemberClass::StrictLinear;
  std::vector<bool> is_linear;
  /// Hybrid classes only: the decomposition each member was cut from.
  std::vector<std::optional<Decomposition>> provenance;
};

/// One base extension of the closure, plus one extension per orientation of
/// each incomparable pair. Members are deduplicated, sorted canonically and
/// their intersection is checked against the target before returning.
Realizer realizer(const Relation& r, MemberClass cls, const DecomposeOptions& opts = {});

/// The target of realizer(r, cls): the transitive closure, taken on the
/// strict part and reflexively closed for reflexive classes.
Relation realizer_target(const Relation& r, MemberClass cls);

struct RealizerCheck {
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

RealizerCheck verify_realizer(const Relation& target, std::span<const Relation> members, MemberClass cls,
                              const DecomposeOptions& opts = {});
RealizerCheck verify_realizer(const Realizer& z, const DecomposeOptions& opts = {});

}  // namespace orderdim
