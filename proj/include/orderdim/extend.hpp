#pragma once

#include <cstdint>
#include <optional>

#include "orderdim/relation.hpp"

namespace orderdim {

enum class LinearMode { Strict, Reflexive };
enum class PartnerClass { IntervalOrder, Semiorder };

std::string_view to_string(PartnerClass c);

/// Topological order with label tie-break: the first remaining element (in
/// sequence order) with no remaining predecessor is emitted next.
///  Strict:    requires an acyclic input, throws CyclicInput otherwise.
///  Reflexive: requires a transitively antisymmetric input, throws
///             SymmetricPair otherwise; the result is reflexive.
Relation linear_extension(const Relation& r, LinearMode mode = LinearMode::Strict);

/// Element sequence of a strict linear order, least element first.
std::vector<Index> linear_order_sequence(const Relation& strict_linear);

struct SaturationTrace {
  Relation result;
  std::size_t rounds = 0;
  /// Rounds that fell back to a single pair because adding the whole
  /// violating set at once closed a cycle.
  std::size_t fallback_rounds = 0;
  /// The relation of the first rejected all-pairs round and its cycle.
  std::optional<Relation> rejected_round;
  std::optional<Witness> rejected_cycle;
};

/// Saturates R <- R u {(x,y) : (x,a),(b,y) in R, (b,a) not in closure(R)}
/// to a fixpoint and returns the transitive closure (an interval order).
Relation interval_extension(const Relation& r);
SaturationTrace interval_extension_traced(const Relation& r);

/// Reflexive closure of the interval extension of closure(r) minus the
/// diagonal. Requires a transitively antisymmetric input.
Relation strong_interval_extension(const Relation& r);

/// Interval extension followed by the 3+1 completion operator
/// T(Q) = {(x,w), x != w : (x,y),(y,z) in Q, (x,w),(w,z) not in Q}
/// applied until no 3+1 pattern remains.
Relation semiorder_extension(const Relation& r);

/// L strict linear, Q in the partner class, L n Q == closure(source).
/// Only ever constructed once that equality has been checked.
struct Decomposition {
  Relation linear_part;
  Relation partner;
  PartnerClass partner_class = PartnerClass::IntervalOrder;
  bool verified = false;
  bool fast_path = false;
  std::uint64_t search_nodes = 0;
};

struct DecomposeOptions {
  std::uint64_t node_budget = 1'000'000;
  /// Ignore the budget; the search then always terminates with a proof.
  bool exhaustive = false;
};

Decomposition linear_interval_decompose(const Relation& r, const DecomposeOptions& opts = {});
Decomposition linear_semiorder_decompose(const Relation& r, const DecomposeOptions& opts = {});
Decomposition decompose(const Relation& r, PartnerClass cls, const DecomposeOptions& opts = {});

/// The direct construction: given a partner q extending closure(r), reverse
/// every pair of q outside closure(r). Succeeds iff the reversed relation
/// R* = closure(r) u {(v,u) : (u,v) in q \ closure(r)} is acyclic.
struct ReverseConstruction {
  Relation reversed;
  PropertyCheck acyclic;
  std::optional<Decomposition> decomposition;
};
ReverseConstruction reverse_construction(const Relation& r, const Relation& q, PartnerClass cls);

bool verify_decomposition(const Relation& r, const Decomposition& d);

}  // namespace orderdim
