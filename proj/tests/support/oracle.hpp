#pragma once

// Naive reference implementations over std::set pair lists. Nothing here
// calls into the library except for conversion to and from Relation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orderdim/relation.hpp"

namespace oracle {

using PairSet = std::set<std::pair<int, int>>;

struct Rel {
  int n = 0;
  PairSet pairs;

  bool has(int a, int b) const { return pairs.count({a, b}) != 0; }
  bool operator==(const Rel&) const = default;
};

inline Rel from(const orderdim::Relation& r) {
  Rel out{static_cast<int>(r.size()), {}};
  for (auto [a, b] : r.pairs()) out.pairs.insert({static_cast<int>(a), static_cast<int>(b)});
  return out;
}

inline orderdim::Relation to_relation(const Rel& r) {
  orderdim::Relation out = orderdim::Relation::numbered(static_cast<std::size_t>(r.n));
  for (auto [a, b] : r.pairs) out.insert(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return out;
}

inline Rel closure(Rel r) {
  bool grew = true;
  while (grew) {
    grew = false;
    PairSet next = r.pairs;
    for (auto [a, b] : r.pairs)
      for (auto [c, d] : r.pairs)
        if (b == c && !next.count({a, d})) {
          next.insert({a, d});
          grew = true;
        }
    r.pairs = std::move(next);
  }
  return r;
}

inline bool irreflexive(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    if (r.has(i, i)) return false;
  return true;
}

inline bool reflexive(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    if (!r.has(i, i)) return false;
  return true;
}

inline bool transitive(const Rel& r) { return closure(r) == r; }
inline bool acyclic(const Rel& r) { return irreflexive(closure(r)); }

inline bool total(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      if (i != j && !r.has(i, j) && !r.has(j, i)) return false;
  return true;
}

inline bool antisymmetric(const Rel& r) {
  for (auto [a, b] : r.pairs)
    if (a != b && r.has(b, a)) return false;
  return true;
}

inline bool strict_partial_order(const Rel& r) { return irreflexive(r) && transitive(r); }
inline bool strict_linear(const Rel& r) { return strict_partial_order(r) && total(r); }

// (a,b),(c,d) in R imply (a,d) or (c,b) in R.
inline bool interval_order(const Rel& r) {
  if (!strict_partial_order(r)) return false;
  for (auto [a, b] : r.pairs)
    for (auto [c, d] : r.pairs)
      if (!r.has(a, d) && !r.has(c, b)) return false;
  return true;
}

inline bool semiorder(const Rel& r) {
  if (!interval_order(r)) return false;
  for (auto [x, y] : r.pairs)
    for (auto [y2, z] : r.pairs) {
      if (y2 != y) continue;
      for (int w = 0; w < r.n; ++w)
        if (!r.has(x, w) && !r.has(w, z) && w != x && w != y && w != z) return false;
    }
  return true;
}

inline PairSet asymmetric_part(const Rel& r) {
  PairSet out;
  for (auto [a, b] : r.pairs)
    if (!r.has(b, a)) out.insert({a, b});
  return out;
}

inline bool extends(const Rel& base, const Rel& cand) {
  if (!std::includes(cand.pairs.begin(), cand.pairs.end(), base.pairs.begin(), base.pairs.end())) return false;
  const PairSet pb = asymmetric_part(base), pc = asymmetric_part(cand);
  return std::includes(pc.begin(), pc.end(), pb.begin(), pb.end());
}

inline Rel meet(const std::vector<Rel>& family) {
  Rel out = family.front();
  for (const Rel& m : family) {
    PairSet keep;
    for (auto p : out.pairs)
      if (m.pairs.count(p)) keep.insert(p);
    out.pairs = std::move(keep);
  }
  return out;
}

/// Every strict partial order containing c, by subset enumeration of the
/// off-diagonal pairs outside c. Only for n <= 5.
inline std::vector<Rel> posets_above(const Rel& c) {
  std::vector<std::pair<int, int>> free;
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b)
      if (a != b && !c.has(a, b)) free.push_back({a, b});
  std::vector<Rel> out;
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Rel r = c;
    for (std::size_t t = 0; t < free.size(); ++t)
      if ((mask >> t) & 1U) r.pairs.insert(free[t]);
    if (strict_partial_order(r)) out.push_back(std::move(r));
  }
  return out;
}

/// Linear extensions of a strict order by permutation enumeration.
inline std::vector<Rel> linear_extensions(const Rel& c) {
  std::vector<int> perm(static_cast<std::size_t>(c.n));
  for (int i = 0; i < c.n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<Rel> out;
  do {
    Rel l{c.n, {}};
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) l.pairs.insert({perm[i], perm[j]});
    if (std::includes(l.pairs.begin(), l.pairs.end(), c.pairs.begin(), c.pairs.end())) out.push_back(std::move(l));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Whether some family of exactly k candidates (with repetition allowed,
/// so "at most k" distinct ones) intersects to c.
inline bool family_exists(const std::vector<Rel>& candidates, const Rel& c, int k,
                          const std::function<bool(const std::vector<Rel>&)>& accept = {}) {
  std::vector<Rel> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      return meet(chosen) == c && (!accept || accept(chosen));
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (pick(i)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (k == 0) return false;
  return pick(0);
}

/// Smallest family size realizing c from candidates.
inline int min_family(const std::vector<Rel>& candidates, const Rel& c, int max_k = 4) {
  for (int k = 1; k <= max_k; ++k)
    if (family_exists(candidates, c, k)) return k;
  return -1;
}

/// Lexicographically least (p,q): p members, q of them non-linear.
inline std::pair<int, int> min_hybrid(const std::vector<Rel>& candidates, const Rel& c, int max_p = 4) {
  for (int p = 1; p <= max_p; ++p)
    for (int q = 0; q <= p; ++q) {
      auto count_ok = [&](const std::vector<Rel>& fam) {
        // Families may repeat a member; the distinct members are what count.
        std::vector<Rel> distinct;
        for (const Rel& m : fam)
          if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
        const auto nonlinear = std::count_if(distinct.begin(), distinct.end(), [](const Rel& m) { return !strict_linear(m); });
        return static_cast<int>(distinct.size()) == p && nonlinear == q;
      };
      if (family_exists(candidates, c, p, count_ok)) return {p, q};
    }
  return {-1, -1};
}

// Generators. These use their own engine so they do not share code with
// the library's audit generator.

inline Rel random_relation(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Rel r{n, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (coin(rng)) r.pairs.insert({a, b});
  return r;
}

inline Rel random_dag(std::mt19937& rng, int n, double density = 0.4) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  Rel r{n, {}};
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (coin(rng)) r.pairs.insert({perm[i], perm[j]});
  return r;
}

/// A DAG with a back edge closing a cycle (or a loop when n == 1).
inline Rel random_cyclic(std::mt19937& rng, int n) {
  Rel r = random_dag(rng, n);
  if (n == 1) {
    r.pairs.insert({0, 0});
    return r;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int a = pick(rng);
  int b = pick(rng);
  while (b == a) b = pick(rng);
  r.pairs.insert({a, b});
  r.pairs.insert({b, a});
  return r;
}

}  // namespace oracle
