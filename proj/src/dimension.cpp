#include "orderdim/dimension.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "detail/small_relation.hpp"
#include "orderdim/classify.hpp"

namespace orderdim {
namespace {

using detail::SmallRelation;

constexpr std::array<std::pair<Quantity, std::string_view>, 5> kQuantityNames{{
    {Quantity::Dim, "dim"},
    {Quantity::IntervalDim, "idim"},
    {Quantity::SemiorderDim, "sdim"},
    {Quantity::LinearIntervalDim, "lidim"},
    {Quantity::LinearSemiorderDim, "lsdim"},
}};

MemberClass witness_class(Quantity q) {
  switch (q) {
    case Quantity::Dim: return MemberClass::StrictLinear;
    case Quantity::IntervalDim: return MemberClass::IntervalOrder;
    case Quantity::SemiorderDim: return MemberClass::Semiorder;
    case Quantity::LinearIntervalDim: return MemberClass::LinearInterval;
    case Quantity::LinearSemiorderDim: return MemberClass::LinearSemiorder;
  }
  return MemberClass::StrictLinear;
}

// Ordered incomparable pairs of the target; a member covers (a,b) iff it
// omits (a,b), and a family realizes the target iff it covers them all.
struct Universe {
  std::vector<Pair> pairs;

  explicit Universe(const SmallRelation& c) {
    for (std::size_t a = 0; a < c.n; ++a)
      for (std::size_t b = 0; b < c.n; ++b)
        if (a != b && !c.has(a, b) && !c.has(b, a)) pairs.emplace_back(a, b);
  }

  std::uint64_t full() const { return pairs.size() == 64 ? ~std::uint64_t{0} : detail::bit(pairs.size()) - 1; }

  std::uint64_t mask(const SmallRelation& m) const {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (!m.has(pairs[t].first, pairs[t].second)) out |= detail::bit(t);
    return out;
  }
};

struct Candidate {
  SmallRelation relation;
  std::uint64_t mask = 0;
};

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;

  void spend(std::uint64_t k = 1) {
    used += k;
    if (used > limit) {
      throw Error(Errc::SizeLimit, "dimension search exceeded its budget of " + std::to_string(limit));
    }
  }
};

// preds is the transpose of the target.
void linear_extensions(const SmallRelation& preds, std::uint64_t placed, std::vector<std::size_t>& seq,
                       std::vector<SmallRelation>& out, Budget& budget) {
  if (seq.size() == preds.n) {
    budget.spend();
    SmallRelation l;
    l.n = preds.n;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j) l.set(seq[i], seq[j]);
    out.push_back(l);
    return;
  }
  for (std::size_t v = 0; v < preds.n; ++v) {
    if ((placed >> v) & 1U) continue;
    if (preds.row[v] & ~placed) continue;
    seq.push_back(v);
    linear_extensions(preds, placed | detail::bit(v), seq, out, budget);
    seq.pop_back();
  }
}

// Every strict partial order containing c, each exactly once: unordered
// incomparable pairs are decided in order as incomparable, (a,b) or (b,a).
struct PosetEnumerator {
  std::vector<Pair> pairs;
  std::vector<SmallRelation>& out;
  Budget& budget;

  void run(const SmallRelation& q, const SmallRelation& forbidden, std::size_t k) {
    budget.spend();
    if (k == pairs.size()) {
      out.push_back(q);
      return;
    }
    const auto [a, b] = pairs[k];
    if (q.has(a, b) || q.has(b, a)) {
      run(q, forbidden, k + 1);
      return;
    }
    SmallRelation f = forbidden;
    f.set(a, b);
    f.set(b, a);
    run(q, f, k + 1);
    for (Pair add : {Pair{a, b}, Pair{b, a}}) {
      SmallRelation next = q;
      next.add_and_close(add.first, add.second);
      bool clash = false;
      for (std::size_t i = 0; i < q.n && !clash; ++i) clash = (next.row[i] & forbidden.row[i]) != 0;
      if (!clash) run(next, forbidden, k + 1);
    }
  }
};

std::vector<SmallRelation> posets_above(const SmallRelation& c, Budget& budget) {
  std::vector<SmallRelation> out;
  PosetEnumerator e{{}, out, budget};
  for (std::size_t a = 0; a < c.n; ++a)
    for (std::size_t b = a + 1; b < c.n; ++b)
      if (!c.has(a, b) && !c.has(b, a)) e.pairs.emplace_back(a, b);
  SmallRelation none;
  none.n = c.n;
  e.run(c, none, 0);
  return out;
}

// Drops candidates whose cover set is strictly contained in another's.
std::vector<Candidate> undominated(std::vector<Candidate> pool) {
  std::stable_sort(pool.begin(), pool.end(), [](const Candidate& x, const Candidate& y) {
    return std::popcount(x.mask) > std::popcount(y.mask);
  });
  std::vector<Candidate> kept;
  std::size_t larger_end = 0;  // kept[0, larger_end) have strictly larger popcount
  int current = -1;
  for (const Candidate& cand : pool) {
    const int pc = std::popcount(cand.mask);
    if (pc != current) {
      larger_end = kept.size();
      current = pc;
    }
    bool dominated = false;
    for (std::size_t t = 0; t < larger_end && !dominated; ++t) dominated = (cand.mask & ~kept[t].mask) == 0;
    if (!dominated) kept.push_back(cand);
  }
  return kept;
}

struct CoverSearch {
  std::vector<std::vector<Candidate>> pools;
  Budget& budget;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  std::set<std::pair<std::uint64_t, std::vector<std::size_t>>> failed;

  bool solve(std::uint64_t uncovered, std::vector<std::size_t>& limits) {
    if (!uncovered) return true;
    budget.spend();
    std::size_t total = 0;
    int widest = 0;
    for (std::size_t p = 0; p < pools.size(); ++p) {
      if (!limits[p]) continue;
      total += limits[p];
      for (const Candidate& c : pools[p]) widest = std::max(widest, std::popcount(c.mask & uncovered));
    }
    if (!total || !widest) return false;
    const auto need = static_cast<std::size_t>((std::popcount(uncovered) + widest - 1) / widest);
    if (need > total) return false;
    auto key = std::make_pair(uncovered, limits);
    if (failed.count(key)) return false;

    // Branch on the uncovered pair with the fewest covering candidates.
    std::vector<std::pair<std::size_t, std::size_t>> best;
    bool have_best = false;
    for (std::uint64_t m = uncovered; m; m &= m - 1) {
      const std::uint64_t e = m & (~m + 1);
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t p = 0; p < pools.size(); ++p) {
        if (!limits[p]) continue;
        for (std::size_t i = 0; i < pools[p].size(); ++i)
          if (pools[p][i].mask & e) options.emplace_back(p, i);
      }
      if (!have_best || options.size() < best.size()) {
        best = std::move(options);
        have_best = true;
      }
      if (best.empty()) break;
    }
    std::stable_sort(best.begin(), best.end(), [&](const auto& x, const auto& y) {
      return std::popcount(pools[x.first][x.second].mask & uncovered) >
             std::popcount(pools[y.first][y.second].mask & uncovered);
    });
    for (auto [p, i] : best) {
      --limits[p];
      chosen.emplace_back(p, i);
      if (solve(uncovered & ~pools[p][i].mask, limits)) return true;
      chosen.pop_back();
      ++limits[p];
    }
    failed.insert(std::move(key));
    return false;
  }
};

struct Setup {
  Relation target;
  SmallRelation closed;
  Universe universe;
};

Setup prepare(const Relation& r, std::size_t cap, std::string_view what) {
  if (auto check = is_acyclic(r); !check) {
    throw Error(Errc::CyclicInput, "dimension needs an acyclic relation", check.witness);
  }
  if (r.size() > cap) {
    throw Error(Errc::SizeLimit, std::string(what) + " is exact only up to " + std::to_string(cap) +
                                     " elements, got " + std::to_string(r.size()));
  }
  Relation target = transitive_closure(r);
  SmallRelation closed = SmallRelation::from(target);
  Universe universe(closed);
  return {std::move(target), closed, std::move(universe)};
}

DimCertificate certificate(const Setup& s, Quantity q, std::vector<SmallRelation> members, const Budget& budget) {
  DimCertificate cert;
  cert.quantity = q;
  cert.budget_used = budget.used;
  cert.exhaustive = true;
  Realizer& z = cert.witness;
  z.target = s.target;
  z.member_class = witness_class(q);
  if (members.empty()) members.push_back(s.closed);
  for (const SmallRelation& m : members) z.members.push_back(m.to_relation(s.target));
  std::sort(z.members.begin(), z.members.end());
  std::size_t nonlinear = 0;
  for (const Relation& m : z.members) {
    z.is_linear.push_back(is_strict_linear_order(m));
    z.provenance.emplace_back();
    if (!z.is_linear.back()) ++nonlinear;
  }
  cert.value.p = z.members.size();
  if (q == Quantity::LinearIntervalDim || q == Quantity::LinearSemiorderDim) cert.value.q = nonlinear;
  return cert;
}

DimCertificate scalar_dim(const Relation& r, Quantity q, const DimOptions& opts) {
  const bool linear = q == Quantity::Dim;
  Setup s = prepare(r, linear ? opts.max_n_linear : opts.max_n_pool, to_string(q));
  Budget budget{opts.budget};

  std::vector<SmallRelation> raw;
  if (linear) {
    std::vector<std::size_t> seq;
    linear_extensions(s.closed.transposed(), 0, seq, raw, budget);
  } else {
    for (const SmallRelation& p : posets_above(s.closed, budget)) {
      if (!p.successor_chain()) continue;
      if (q == Quantity::SemiorderDim && p.first_semiorder_violation()) continue;
      raw.push_back(p);
    }
  }
  std::vector<Candidate> pool;
  for (const SmallRelation& m : raw) pool.push_back({m, s.universe.mask(m)});
  CoverSearch search{{undominated(std::move(pool))}, budget, {}, {}};

  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> limits{k};
    search.failed.clear();
    if (search.solve(s.universe.full(), limits)) break;
  }
  std::vector<SmallRelation> members;
  for (auto [p, i] : search.chosen) members.push_back(search.pools[p][i].relation);
  return certificate(s, q, std::move(members), budget);
}

}  // namespace

std::string_view to_string(Quantity q) {
  for (auto [k, name] : kQuantityNames)
    if (k == q) return name;
  return "?";
}

std::optional<Quantity> quantity_from_string(std::string_view name) {
  for (auto [k, n] : kQuantityNames)
    if (n == name) return k;
  return std::nullopt;
}

bool DimValue::operator<(const DimValue& o) const {
  return std::pair(p, q.value_or(0)) < std::pair(o.p, o.q.value_or(0));
}

std::string DimValue::display() const {
  if (!q) return std::to_string(p);
  return "(" + std::to_string(p) + "," + std::to_string(*q) + ")";
}

DimCertificate order_dim(const Relation& r, const DimOptions& opts) { return scalar_dim(r, Quantity::Dim, opts); }

DimCertificate interval_dim(const Relation& r, const DimOptions& opts) {
  return scalar_dim(r, Quantity::IntervalDim, opts);
}

DimCertificate semiorder_dim(const Relation& r, const DimOptions& opts) {
  return scalar_dim(r, Quantity::SemiorderDim, opts);
}

DimCertificate hybrid_dim(const Relation& r, PartnerClass partner, const DimOptions& opts) {
  const Quantity q =
      partner == PartnerClass::IntervalOrder ? Quantity::LinearIntervalDim : Quantity::LinearSemiorderDim;
  Setup s = prepare(r, opts.max_n_pool, to_string(q));
  Budget budget{opts.budget};

  std::vector<Candidate> linear, other;
  for (const SmallRelation& m : posets_above(s.closed, budget)) {
    if (!m.successor_chain()) continue;
    if (partner == PartnerClass::Semiorder && m.first_semiorder_violation()) continue;
    (m.total() ? linear : other).push_back({m, s.universe.mask(m)});
  }
  CoverSearch search{{undominated(std::move(linear)), undominated(std::move(other))}, budget, {}, {}};

  for (std::size_t p = 1;; ++p) {
    for (std::size_t nl = 0; nl <= p; ++nl) {
      std::vector<std::size_t> limits{p - nl, nl};
      search.failed.clear();
      search.chosen.clear();
      if (s.universe.pairs.empty() ? nl == 0 : search.solve(s.universe.full(), limits)) {
        std::vector<SmallRelation> members;
        for (auto [pool, i] : search.chosen) members.push_back(search.pools[pool][i].relation);
        return certificate(s, q, std::move(members), budget);
      }
    }
  }
}

DimCertificate dimension(const Relation& r, Quantity q, const DimOptions& opts) {
  switch (q) {
    case Quantity::Dim: return order_dim(r, opts);
    case Quantity::IntervalDim: return interval_dim(r, opts);
    case Quantity::SemiorderDim: return semiorder_dim(r, opts);
    case Quantity::LinearIntervalDim: return hybrid_dim(r, PartnerClass::IntervalOrder, opts);
    case Quantity::LinearSemiorderDim: return hybrid_dim(r, PartnerClass::Semiorder, opts);
  }
  throw Error(Errc::InvalidArgument, "unknown quantity");
}

bool verify_certificate(const Relation& r, const DimCertificate& cert) {
  const Realizer& z = cert.witness;
  if (z.member_class != witness_class(cert.quantity)) return false;
  if (!(z.target == transitive_closure(r))) return false;
  if (!verify_realizer(z)) return false;
  if (z.members.size() != cert.value.p) return false;
  const bool hybrid = cert.quantity == Quantity::LinearIntervalDim || cert.quantity == Quantity::LinearSemiorderDim;
  if (hybrid != cert.value.q.has_value()) return false;
  if (hybrid) {
    const auto nonlinear = static_cast<std::size_t>(std::count(z.is_linear.begin(), z.is_linear.end(), false));
    if (nonlinear != *cert.value.q) return false;
  }
  return true;
}

}  // namespace orderdim
