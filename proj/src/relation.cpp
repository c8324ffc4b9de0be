#include "orderdim/relation.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace orderdim {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Cycle: return "Cycle";
    case WitnessKind::TwoPlusTwo: return "TwoPlusTwo";
    case WitnessKind::ThreePlusOne: return "ThreePlusOne";
    case WitnessKind::SymmetricPair: return "SymmetricPair";
  }
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(std::string_view name) {
  for (auto k : {WitnessKind::Cycle, WitnessKind::TwoPlusTwo, WitnessKind::ThreePlusOne,
                 WitnessKind::SymmetricPair}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::GroundSetMismatch: return "GroundSetMismatch";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::SymmetricPair: return "SymmetricPair";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::InternalSaturationCycle: return "InternalSaturationCycle";
    case Errc::InternalOperatorFailure: return "InternalOperatorFailure";
    case Errc::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case Errc::NoDecompositionFound: return "NoDecompositionFound";
    case Errc::MemberConstructionFailed: return "MemberConstructionFailed";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotIntervalOrder: return "NotIntervalOrder";
    case Errc::NotSemiorder: return "NotSemiorder";
    case Errc::InfeasibleSystem: return "InfeasibleSystem";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::MemberNotLinear: return "MemberNotLinear";
    case Errc::RealizerInvalid: return "RealizerInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

Relation::Relation(std::vector<std::string> elements)
    : elements_(std::move(elements)),
      words_((elements_.size() + 63) / 64),
      bits_(elements_.size() * words_, 0) {
  index_.reserve(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(Errc::DuplicateElement, "element '" + elements_[i] + "' is declared twice");
    }
  }
}

Relation::Relation(std::vector<std::string> elements, std::span<const Pair> pairs)
    : Relation(std::move(elements)) {
  for (auto [a, b] : pairs) insert(a, b);
}

Relation Relation::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return Relation(std::move(labels));
}

Relation Relation::empty_like(const Relation& other) {
  Relation r = other;
  std::fill(r.bits_.begin(), r.bits_.end(), 0);
  return r;
}

Relation Relation::full_like(const Relation& other) {
  Relation r = empty_like(other);
  for (Index i = 0; i < r.size(); ++i)
    for (Index j = 0; j < r.size(); ++j) r.insert(i, j);
  return r;
}

Relation Relation::diagonal_like(const Relation& other) {
  Relation r = empty_like(other);
  for (Index i = 0; i < r.size(); ++i) r.insert(i, i);
  return r;
}

std::optional<Index> Relation::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Relation::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(Errc::UnknownElement, "element '" + std::string(label) + "' is not declared");
}

void Relation::insert(Index from, Index to) {
  if (from >= size() || to >= size()) {
    throw Error(Errc::InvalidArgument, "pair index out of range");
  }
  bits_[from * words_ + (to >> 6)] |= std::uint64_t{1} << (to & 63);
}

void Relation::erase(Index from, Index to) {
  if (from >= size() || to >= size()) {
    throw Error(Errc::InvalidArgument, "pair index out of range");
  }
  bits_[from * words_ + (to >> 6)] &= ~(std::uint64_t{1} << (to & 63));
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (Index i = 0; i < size(); ++i)
    for (Index j = 0; j < size(); ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t Relation::pair_count() const noexcept {
  std::size_t count = 0;
  for (auto w : bits_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool Relation::subset_of(const Relation& other) const {
  require_same_ground_set(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  require_same_ground_set(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  require_same_ground_set(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
  return *this;
}

bool Relation::operator<(const Relation& other) const {
  if (elements_ != other.elements_) return elements_ < other.elements_;
  // Row-major pair lists compared lexicographically.
  for (Index i = 0; i < size(); ++i) {
    for (Index j = 0; j < size(); ++j) {
      bool a = contains(i, j), b = other.contains(i, j);
      if (a != b) return a;
    }
  }
  return false;
}

void require_same_ground_set(const Relation& a, const Relation& b) {
  if (!a.same_ground_set(b)) {
    throw Error(Errc::GroundSetMismatch, "relations are defined on different element sequences");
  }
}

Relation transitive_closure(const Relation& r) {
  Relation c = r;
  const std::size_t n = c.size();
  const std::size_t w = c.words_;
  for (Index k = 0; k < n; ++k) {
    const std::uint64_t* row_k = c.bits_.data() + k * w;
    for (Index i = 0; i < n; ++i) {
      if (!c.contains(i, k)) continue;
      std::uint64_t* row_i = c.mutable_row(i);
      for (std::size_t t = 0; t < w; ++t) row_i[t] |= row_k[t];
    }
  }
  return c;
}

Relation reflexive_closure(const Relation& r) {
  Relation out = r;
  for (Index i = 0; i < out.size(); ++i) out.insert(i, i);
  return out;
}

Relation asymmetric_part(const Relation& r) {
  Relation out = Relation::empty_like(r);
  for (Index i = 0; i < r.size(); ++i)
    for (Index j = 0; j < r.size(); ++j)
      if (r.contains(i, j) && !r.contains(j, i)) out.insert(i, j);
  return out;
}

Relation without_diagonal(const Relation& r) {
  Relation out = r;
  for (Index i = 0; i < out.size(); ++i) out.erase(i, i);
  return out;
}

Relation transitive_reduction(const Relation& r) {
  const Relation c = transitive_closure(r);
  Relation out = Relation::empty_like(r);
  for (Index i = 0; i < c.size(); ++i) {
    for (Index j = 0; j < c.size(); ++j) {
      if (i == j || !c.contains(i, j)) continue;
      bool covered = true;
      for (Index k = 0; k < c.size() && covered; ++k) {
        if (k != i && k != j && c.contains(i, k) && c.contains(k, j)) covered = false;
      }
      if (covered) out.insert(i, j);
    }
  }
  return out;
}

Witness cycle_witness(const Relation& r, std::span<const Index> walk) {
  Witness w{WitnessKind::Cycle, {}};
  for (Index v : walk) w.members.push_back(r.label(v));
  return w;
}

PropertyCheck is_acyclic(const Relation& r) {
  const Relation c = transitive_closure(r);
  const std::size_t n = r.size();
  for (Index start = 0; start < n; ++start) {
    if (!c.contains(start, start)) continue;
    if (r.contains(start, start)) {
      const Index walk[] = {start, start};
      return {false, cycle_witness(r, walk)};
    }
    // BFS for the shortest walk start -> ... -> start.
    std::vector<Index> parent(n, n);
    std::deque<Index> queue;
    for (Index v = 0; v < n; ++v) {
      if (r.contains(start, v)) {
        parent[v] = start;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      Index u = queue.front();
      queue.pop_front();
      if (r.contains(u, start)) {
        std::vector<Index> walk{start};
        for (Index v = u; v != start; v = parent[v]) walk.push_back(v);
        std::reverse(walk.begin() + 1, walk.end());
        walk.push_back(start);
        return {false, cycle_witness(r, walk)};
      }
      for (Index v = 0; v < n; ++v) {
        if (v != start && parent[v] == n && r.contains(u, v)) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
  }
  return {true, std::nullopt};
}

PropertyCheck is_transitively_antisymmetric(const Relation& r) {
  const Relation c = transitive_closure(r);
  for (Index i = 0; i < c.size(); ++i) {
    for (Index j = i + 1; j < c.size(); ++j) {
      if (c.contains(i, j) && c.contains(j, i)) {
        return {false, Witness{WitnessKind::SymmetricPair, {r.label(i), r.label(j)}}};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_extension(const Relation& base, const Relation& cand) {
  require_same_ground_set(base, cand);
  return base.subset_of(cand) && asymmetric_part(base).subset_of(asymmetric_part(cand));
}

bool verify_witness(const Relation& r, const Witness& w) {
  std::vector<Index> m;
  for (const auto& label : w.members) {
    auto i = r.find(label);
    if (!i) return false;
    m.push_back(*i);
  }
  switch (w.kind) {
    case WitnessKind::Cycle: {
      if (m.size() < 2 || m.front() != m.back()) return false;
      for (std::size_t k = 0; k + 1 < m.size(); ++k)
        if (!r.contains(m[k], m[k + 1])) return false;
      return true;
    }
    case WitnessKind::SymmetricPair: {
      if (m.size() != 2 || m[0] == m[1]) return false;
      const Relation c = transitive_closure(r);
      return c.contains(m[0], m[1]) && c.contains(m[1], m[0]);
    }
    case WitnessKind::TwoPlusTwo: {
      if (m.size() != 4) return false;
      const Index x = m[0], y = m[1], a = m[2], b = m[3];
      const Relation c = transitive_closure(r);
      return r.contains(x, a) && r.contains(b, y) && !c.contains(b, a) && !r.contains(x, y);
    }
    case WitnessKind::ThreePlusOne: {
      if (m.size() != 4) return false;
      const Index x = m[0], y = m[1], z = m[2], w4 = m[3];
      return w4 != x && w4 != y && w4 != z && r.contains(x, y) && r.contains(y, z) &&
             !r.contains(x, w4) && !r.contains(w4, z);
    }
  }
  return false;
}

}  // namespace orderdim
