#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orderdim {

using Index = std::size_t;
using Pair = std::pair<Index, Index>;

enum class WitnessKind { Cycle, TwoPlusTwo, ThreePlusOne, SymmetricPair };

std::string_view to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(std::string_view name);

/// A certified forbidden pattern. Members are element labels in role order:
///   Cycle          v0 v1 ... vk with vk == v0, every step a pair of the relation
///   SymmetricPair  x y, x != y, both directions in the transitive closure
///   TwoPlusTwo     x y a b with (x,a),(b,y) in R, (b,a) not in closure(R), (x,y) not in R
///   ThreePlusOne   x y z w with (x,y),(y,z) in R, (x,w),(w,z) not in R, w not in {x,y,z}
struct Witness {
  WitnessKind kind = WitnessKind::Cycle;
  std::vector<std::string> members;

  bool operator==(const Witness&) const = default;
};

enum class Errc {
  GroundSetMismatch,
  CyclicInput,
  SymmetricPair,
  NotReflexive,
  InternalSaturationCycle,
  InternalOperatorFailure,
  SearchBudgetExhausted,
  NoDecompositionFound,
  MemberConstructionFailed,
  SizeLimit,
  NotIntervalOrder,
  NotSemiorder,
  InfeasibleSystem,
  EmptyFamily,
  MemberNotLinear,
  RealizerInvalid,
  ParseError,
  UnknownElement,
  DuplicateElement,
  UnsupportedCombination,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure in the library is reported through this exception. Errors
/// raised because an input lacks a required property carry the witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<Witness> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::optional<Witness> witness_;
};

/// Finite binary relation over a labeled ground set, stored as a dense bit
/// matrix (one row of words per source element). The element sequence order
/// is the tie-break order for every deterministic choice in the library.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::vector<std::string> elements);
  Relation(std::vector<std::string> elements, std::span<const Pair> pairs);

  /// Ground set x1..xn.
  static Relation numbered(std::size_t n, std::string_view prefix = "x");
  /// Same ground set, no pairs.
  static Relation empty_like(const Relation& other);
  /// Same ground set, every pair.
  static Relation full_like(const Relation& other);
  static Relation diagonal_like(const Relation& other);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& label(Index i) const { return elements_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  Index index_of(std::string_view label) const;

  bool contains(Index from, Index to) const noexcept {
    return (bits_[from * words_ + (to >> 6)] >> (to & 63)) & 1U;
  }
  void insert(Index from, Index to);
  void erase(Index from, Index to);
  void insert_labels(std::string_view from, std::string_view to) {
    insert(index_of(from), index_of(to));
  }

  std::vector<Pair> pairs() const;
  std::size_t pair_count() const noexcept;
  bool empty_pairs() const noexcept { return pair_count() == 0; }

  std::span<const std::uint64_t> row(Index i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  bool same_ground_set(const Relation& other) const noexcept {
    return elements_ == other.elements_;
  }
  /// Pair-set inclusion; both relations must share the ground set.
  bool subset_of(const Relation& other) const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }

  bool operator==(const Relation& other) const noexcept {
    return elements_ == other.elements_ && bits_ == other.bits_;
  }
  /// Canonical order: ground set first, then the row-major bit pattern.
  bool operator<(const Relation& other) const;

 private:
  friend Relation transitive_closure(const Relation& r);

  std::uint64_t* mutable_row(Index i) { return bits_.data() + i * words_; }

  std::vector<std::string> elements_;
  std::unordered_map<std::string, Index> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Throws GroundSetMismatch unless both relations share the element sequence.
void require_same_ground_set(const Relation& a, const Relation& b);

/// Outcome of a yes/no property test that certifies its negative answers.
struct PropertyCheck {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

Relation transitive_closure(const Relation& r);
Relation reflexive_closure(const Relation& r);
/// P(R): pairs whose reverse is absent.
Relation asymmetric_part(const Relation& r);
Relation without_diagonal(const Relation& r);
/// Hasse edges of the transitive closure of an acyclic relation.
Relation transitive_reduction(const Relation& r);

/// The witness on failure is the shortest closed walk found by BFS from the
/// first element (in sequence order) that lies on a cycle.
PropertyCheck is_acyclic(const Relation& r);
PropertyCheck is_transitively_antisymmetric(const Relation& r);

/// cand extends base iff base is contained in cand and P(base) in P(cand).
bool is_extension(const Relation& base, const Relation& cand);

/// Re-checks a witness against the relation it was issued for.
bool verify_witness(const Relation& r, const Witness& w);

Witness cycle_witness(const Relation& r, std::span<const Index> walk);

}  // namespace orderdim
