#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>

#include "orderdim/classify.hpp"
#include "orderdim/relation.hpp"

namespace orderdim::detail {

inline constexpr std::size_t kMaxSmall = 64;

inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

/// Fixed-capacity relation (n <= 64, one word per row) for the search loops,
/// which copy a relation per node.
struct SmallRelation {
  std::size_t n = 0;
  std::array<std::uint64_t, kMaxSmall> row{};

  static SmallRelation from(const Relation& r) {
    if (r.size() > kMaxSmall) {
      throw Error(Errc::SizeLimit, "search routines support at most 64 elements");
    }
    SmallRelation s;
    s.n = r.size();
    for (Index i = 0; i < s.n; ++i)
      if (s.n) s.row[i] = r.row(i)[0];
    return s;
  }

  Relation to_relation(const Relation& like) const {
    Relation out = Relation::empty_like(like);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (has(i, j)) out.insert(i, j);
    return out;
  }

  bool has(std::size_t i, std::size_t j) const { return (row[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j) { row[i] |= bit(j); }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

  void close() {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (has(i, k)) row[i] |= row[k];
  }

  bool irreflexive() const {
    for (std::size_t i = 0; i < n; ++i)
      if (has(i, i)) return false;
    return true;
  }

  /// Adds (a,b) to a transitive relation and restores transitivity.
  void add_and_close(std::size_t a, std::size_t b) {
    const std::uint64_t tail = row[b] | bit(b);
    for (std::size_t u = 0; u < n; ++u)
      if (u == a || has(u, a)) row[u] |= tail;
  }

  SmallRelation transposed() const {
    SmallRelation t;
    t.n = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint64_t m = row[i]; m; m &= m - 1) t.row[std::countr_zero(m)] |= bit(i);
    return t;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(row[i]));
    return c;
  }

  bool operator==(const SmallRelation& o) const {
    if (n != o.n) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != o.row[i]) return false;
    return true;
  }

  /// Lexicographically first ((x,y),(a,b)) violating the Russell-Wiener
  /// condition. Requires a transitive relation, so closure == *this.
  std::optional<IntervalViolation> first_interval_violation() const {
    const SmallRelation t = transposed();
    for (std::size_t x = 0; x < n; ++x) {
      if (!row[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (has(x, y) || !t.row[y]) continue;
        for (std::uint64_t as = row[x]; as; as &= as - 1) {
          const std::size_t a = static_cast<std::size_t>(std::countr_zero(as));
          const std::uint64_t bs = t.row[y] & ~t.row[a];
          if (bs) return IntervalViolation{x, y, a, static_cast<std::size_t>(std::countr_zero(bs))};
        }
      }
    }
    return std::nullopt;
  }

  /// Lexicographically first 3+1 quadruple (x,y,z,w).
  std::optional<SemiorderViolation> first_semiorder_violation() const {
    const SmallRelation t = transposed();
    for (std::size_t x = 0; x < n; ++x)
      for (std::uint64_t ys = row[x]; ys; ys &= ys - 1) {
        const std::size_t y = static_cast<std::size_t>(std::countr_zero(ys));
        for (std::uint64_t zs = row[y]; zs; zs &= zs - 1) {
          const std::size_t z = static_cast<std::size_t>(std::countr_zero(zs));
          std::uint64_t ws = all() & ~row[x] & ~t.row[z] & ~bit(x) & ~bit(y) & ~bit(z);
          if (ws) return SemiorderViolation{x, y, z, static_cast<std::size_t>(std::countr_zero(ws))};
        }
      }
    return std::nullopt;
  }

  /// Interval-order test for an irreflexive transitive relation.
  bool successor_chain() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((row[i] & ~row[j]) && (row[j] & ~row[i])) return false;
    return true;
  }

  bool total() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!has(i, j) && !has(j, i)) return false;
    return true;
  }
};

}  // namespace orderdim::detail
