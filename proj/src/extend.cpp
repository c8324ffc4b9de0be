#include "orderdim/extend.hpp"

#include <limits>

#include "detail/small_relation.hpp"
#include "orderdim/classify.hpp"

namespace orderdim {

std::string_view to_string(PartnerClass c) {
  return c == PartnerClass::IntervalOrder ? "IntervalOrder" : "Semiorder";
}

namespace {

void require_acyclic(const Relation& r) {
  if (auto check = is_acyclic(r); !check) {
    throw Error(Errc::CyclicInput, "the relation contains a cycle", check.witness);
  }
}

void require_transitively_antisymmetric(const Relation& r) {
  if (auto check = is_transitively_antisymmetric(r); !check) {
    throw Error(Errc::SymmetricPair, "the transitive closure is not antisymmetric", check.witness);
  }
}

// Topological order of an acyclic transitive relation, smallest index first.
std::vector<Index> topological_order(const Relation& closed) {
  const std::size_t n = closed.size();
  std::vector<bool> placed(n, false);
  std::vector<Index> order;
  order.reserve(n);
  while (order.size() < n) {
    for (Index v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool source = true;
      for (Index u = 0; u < n && source; ++u) source = placed[u] || u == v || !closed.contains(u, v);
      if (source) {
        placed[v] = true;
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}

Relation chain_from(const Relation& like, const std::vector<Index>& order) {
  Relation out = Relation::empty_like(like);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) out.insert(order[i], order[j]);
  return out;
}

// Pairs (x,y) not in r with (x,a),(b,y) in r and (b,a) outside closure(r).
std::vector<Pair> saturation_pairs(const Relation& r) {
  const Relation c = transitive_closure(r);
  const std::size_t n = r.size();
  std::vector<Pair> out;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (r.contains(x, y)) continue;
      bool found = false;
      for (Index a = 0; a < n && !found; ++a) {
        if (!r.contains(x, a)) continue;
        for (Index b = 0; b < n && !found; ++b) found = r.contains(b, y) && !c.contains(b, a);
      }
      if (found) out.emplace_back(x, y);
    }
  return out;
}

Relation completion_pairs(const Relation& q) {
  Relation t = Relation::empty_like(q);
  const std::size_t n = q.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!q.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (!q.contains(y, z)) continue;
        for (Index w = 0; w < n; ++w)
          if (w != x && !q.contains(x, w) && !q.contains(w, z)) t.insert(x, w);
      }
    }
  return t;
}

bool in_partner_class(const Relation& q, PartnerClass cls) {
  return cls == PartnerClass::IntervalOrder ? is_interval_order(q) : is_semiorder(q);
}

Decomposition finish(const Relation& closed, Relation reversed, Relation partner, PartnerClass cls) {
  Decomposition d;
  d.linear_part = linear_extension(transitive_closure(reversed), LinearMode::Strict);
  d.partner = std::move(partner);
  d.partner_class = cls;
  d.verified = is_strict_linear_order(d.linear_part) && in_partner_class(d.partner, cls) &&
               (d.linear_part & d.partner) == closed;
  if (!d.verified) {
    throw Error(Errc::InternalOperatorFailure, "decomposition failed its intersection check");
  }
  return d;
}

Relation reversed_relation(const Relation& closed, const Relation& q) {
  Relation out = closed;
  for (auto [u, v] : q.pairs())
    if (!closed.contains(u, v)) out.insert(v, u);
  return out;
}

struct DecompositionSearch {
  detail::SmallRelation closed;
  PartnerClass cls;
  std::uint64_t budget;
  bool exhaustive;
  std::uint64_t nodes = 0;

  bool reversal_acyclic(const detail::SmallRelation& q) const {
    detail::SmallRelation rs = closed;
    for (std::size_t u = 0; u < q.n; ++u) {
      for (std::uint64_t m = q.row[u] & ~closed.row[u]; m; m &= m - 1) {
        rs.set(static_cast<std::size_t>(std::countr_zero(m)), u);
      }
    }
    rs.close();
    return rs.irreflexive();
  }

  std::optional<detail::SmallRelation> branch(const detail::SmallRelation& q, Pair first, Pair second) {
    for (Pair add : {first, second}) {
      detail::SmallRelation next = q;
      next.add_and_close(add.first, add.second);
      if (auto found = run(next)) return found;
    }
    return std::nullopt;
  }

  std::optional<detail::SmallRelation> run(const detail::SmallRelation& q) {
    if (++nodes > budget && !exhaustive) {
      throw Error(Errc::SearchBudgetExhausted,
                  "decomposition search exceeded " + std::to_string(budget) + " nodes");
    }
    if (!q.irreflexive() || !reversal_acyclic(q)) return std::nullopt;
    // Every interval order containing q contains (x,y) or (b,a).
    if (auto v = q.first_interval_violation()) return branch(q, {v->x, v->y}, {v->b, v->a});
    // Every semiorder containing q contains (x,w) or (w,z).
    if (cls == PartnerClass::Semiorder) {
      if (auto v = q.first_semiorder_violation()) return branch(q, {v->x, v->w}, {v->w, v->z});
    }
    return q;
  }
};

}  // namespace

Relation linear_extension(const Relation& r, LinearMode mode) {
  if (mode == LinearMode::Strict) {
    require_acyclic(r);
    return chain_from(r, topological_order(transitive_closure(r)));
  }
  require_transitively_antisymmetric(r);
  return reflexive_closure(chain_from(r, topological_order(without_diagonal(transitive_closure(r)))));
}

std::vector<Index> linear_order_sequence(const Relation& strict_linear) {
  if (!is_strict_linear_order(strict_linear)) {
    throw Error(Errc::MemberNotLinear, "relation is not a strict linear order");
  }
  return topological_order(strict_linear);
}

SaturationTrace interval_extension_traced(const Relation& r) {
  require_acyclic(r);
  SaturationTrace trace;
  Relation current = r;
  bool single_pair_mode = false;
  for (;;) {
    const std::vector<Pair> adds = saturation_pairs(current);
    if (adds.empty()) break;
    ++trace.rounds;
    if (!single_pair_mode) {
      Relation next = current;
      for (auto [x, y] : adds) next.insert(x, y);
      if (auto check = is_acyclic(next); check) {
        current = std::move(next);
        continue;
      } else if (!trace.rejected_round) {
        trace.rejected_round = next;
        trace.rejected_cycle = check.witness;
      }
      single_pair_mode = true;
    }
    ++trace.fallback_rounds;
    current.insert(adds.front().first, adds.front().second);
    if (auto check = is_acyclic(current); !check) {
      throw Error(Errc::InternalSaturationCycle, "single-pair saturation step closed a cycle",
                  check.witness);
    }
  }
  trace.result = transitive_closure(current);
  return trace;
}

Relation interval_extension(const Relation& r) { return interval_extension_traced(r).result; }

Relation strong_interval_extension(const Relation& r) {
  require_transitively_antisymmetric(r);
  return reflexive_closure(interval_extension(without_diagonal(transitive_closure(r))));
}

Relation semiorder_extension(const Relation& r) {
  Relation q = interval_extension(r);
  for (;;) {
    const Relation t = completion_pairs(q);
    if (t.empty_pairs()) break;
    q |= t;
    if (!is_irreflexive(q) || !is_transitive(q) || !is_interval_order(q)) {
      throw Error(Errc::InternalOperatorFailure,
                  "3+1 completion round broke irreflexivity, transitivity or the interval condition");
    }
  }
  return q;
}

ReverseConstruction reverse_construction(const Relation& r, const Relation& q, PartnerClass cls) {
  require_same_ground_set(r, q);
  const Relation closed = transitive_closure(r);
  if (!closed.subset_of(q) || !in_partner_class(q, cls)) {
    throw Error(Errc::InvalidArgument, "partner must be a " + std::string(to_string(cls)) +
                                           " containing the transitive closure");
  }
  ReverseConstruction out{reversed_relation(closed, q), {}, std::nullopt};
  out.acyclic = is_acyclic(out.reversed);
  if (out.acyclic) out.decomposition = finish(closed, out.reversed, q, cls);
  return out;
}

Decomposition decompose(const Relation& r, PartnerClass cls, const DecomposeOptions& opts) {
  require_acyclic(r);
  const Relation closed = transitive_closure(r);

  const Relation literal = cls == PartnerClass::IntervalOrder ? interval_extension(r) : semiorder_extension(r);
  if (auto fast = reverse_construction(r, literal, cls); fast.decomposition) {
    fast.decomposition->fast_path = true;
    return *std::move(fast.decomposition);
  }

  DecompositionSearch search{detail::SmallRelation::from(closed), cls, opts.node_budget, opts.exhaustive};
  const auto found = search.run(search.closed);
  if (!found) {
    throw Error(Errc::NoDecompositionFound,
                "exhaustive search over " + std::to_string(search.nodes) + " nodes found no " +
                    std::string(cls == PartnerClass::IntervalOrder ? "linear-interval"
                                                                   : "linear-semiorder") +
                    " decomposition");
  }
  const Relation partner = found->to_relation(r);
  Decomposition d = finish(closed, reversed_relation(closed, partner), partner, cls);
  d.search_nodes = search.nodes;
  return d;
}

Decomposition linear_interval_decompose(const Relation& r, const DecomposeOptions& opts) {
  return decompose(r, PartnerClass::IntervalOrder, opts);
}

Decomposition linear_semiorder_decompose(const Relation& r, const DecomposeOptions& opts) {
  return decompose(r, PartnerClass::Semiorder, opts);
}

bool verify_decomposition(const Relation& r, const Decomposition& d) {
  if (!d.linear_part.same_ground_set(r) || !d.partner.same_ground_set(r)) return false;
  return is_strict_linear_order(d.linear_part) && in_partner_class(d.partner, d.partner_class) &&
         (d.linear_part & d.partner) == transitive_closure(r);
}

}  // namespace orderdim
