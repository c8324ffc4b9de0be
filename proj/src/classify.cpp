#include "orderdim/classify.hpp"

namespace orderdim {
namespace {

bool row_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] & ~b[t]) return false;
  return true;
}

Relation transpose(const Relation& r) {
  Relation t = Relation::empty_like(r);
  for (auto [i, j] : r.pairs()) t.insert(j, i);
  return t;
}

bool is_reflexive(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i)
    if (!r.contains(i, i)) return false;
  return true;
}

bool is_total(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i)
    for (Index j = i + 1; j < r.size(); ++j)
      if (!r.contains(i, j) && !r.contains(j, i)) return false;
  return true;
}

std::optional<Pair> first_symmetric_pair(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i)
    for (Index j = i + 1; j < r.size(); ++j)
      if (r.contains(i, j) && r.contains(j, i)) return Pair{i, j};
  return std::nullopt;
}

std::optional<Index> first_loop(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i)
    if (r.contains(i, i)) return i;
  return std::nullopt;
}

// For an irreflexive transitive relation the Russell-Wiener condition holds
// iff the successor sets are totally ordered by inclusion.
bool successor_sets_form_chain(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i) {
    for (Index j = i + 1; j < r.size(); ++j) {
      if (!row_subset(r.row(i), r.row(j)) && !row_subset(r.row(j), r.row(i))) return false;
    }
  }
  return true;
}

// For an interval order: no x<z with an intermediate y and some w outside
// both the successors of x and the predecessors of z.
bool three_plus_one_free(const Relation& r, const Relation& transposed) {
  const std::size_t words = r.words_per_row();
  for (Index x = 0; x < r.size(); ++x) {
    auto succ_x = r.row(x);
    for (Index z = 0; z < r.size(); ++z) {
      if (!r.contains(x, z)) continue;
      auto pred_z = transposed.row(z);
      bool has_middle = false;
      for (std::size_t t = 0; t < words && !has_middle; ++t) has_middle = (succ_x[t] & pred_z[t]) != 0;
      if (!has_middle) continue;
      for (std::size_t t = 0; t < words; ++t) {
        std::uint64_t cand = ~succ_x[t] & ~pred_z[t];
        if (t == x / 64) cand &= ~(std::uint64_t{1} << (x % 64));
        if (t == words - 1 && r.size() % 64 != 0) cand &= (std::uint64_t{1} << (r.size() % 64)) - 1;
        if (cand) return false;
      }
    }
  }
  return true;
}

void attach(ClassReport& report, const Relation& r, Property p, std::optional<Witness> w) {
  if (w && verify_witness(r, *w)) report.witnesses.emplace(p, std::move(*w));
}

std::optional<Witness> transitivity_witness(const Relation& r) {
  for (Index x = 0; x < r.size(); ++x)
    for (Index a = 0; a < r.size(); ++a) {
      if (!r.contains(x, a)) continue;
      for (Index y = 0; y < r.size(); ++y)
        if (r.contains(a, y) && !r.contains(x, y))
          return Witness{WitnessKind::TwoPlusTwo, {r.label(x), r.label(y), r.label(a), r.label(a)}};
    }
  return std::nullopt;
}

std::optional<Witness> interval_witness(const Relation& r) {
  if (auto cyc = is_acyclic(r); !cyc) return cyc.witness;
  if (auto v = first_interval_violation(r)) return to_witness(r, *v);
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Irreflexive: return "irreflexive";
    case Property::Reflexive: return "reflexive";
    case Property::Transitive: return "transitive";
    case Property::Antisymmetric: return "antisymmetric";
    case Property::Asymmetric: return "asymmetric";
    case Property::Total: return "total";
    case Property::Acyclic: return "acyclic";
    case Property::TransitivelyAntisymmetric: return "transitively_antisymmetric";
    case Property::StrictPartialOrder: return "strict_partial_order";
    case Property::PartialOrder: return "partial_order";
    case Property::StrictLinearOrder: return "strict_linear_order";
    case Property::LinearOrder: return "linear_order";
    case Property::IntervalOrder: return "interval_order";
    case Property::Semiorder: return "semiorder";
    case Property::StrongIntervalOrder: return "strong_interval_order";
  }
  return "?";
}

bool ClassReport::flag(Property p) const {
  switch (p) {
    case Property::Irreflexive: return irreflexive;
    case Property::Reflexive: return reflexive;
    case Property::Transitive: return transitive;
    case Property::Antisymmetric: return antisymmetric;
    case Property::Asymmetric: return asymmetric;
    case Property::Total: return total;
    case Property::Acyclic: return acyclic;
    case Property::TransitivelyAntisymmetric: return transitively_antisymmetric;
    case Property::StrictPartialOrder: return strict_partial_order;
    case Property::PartialOrder: return partial_order;
    case Property::StrictLinearOrder: return strict_linear_order;
    case Property::LinearOrder: return linear_order;
    case Property::IntervalOrder: return interval_order;
    case Property::Semiorder: return semiorder;
    case Property::StrongIntervalOrder: return strong_interval_order;
  }
  return false;
}

bool is_transitive(const Relation& r) {
  for (Index i = 0; i < r.size(); ++i)
    for (Index k = 0; k < r.size(); ++k)
      if (r.contains(i, k) && !row_subset(r.row(k), r.row(i))) return false;
  return true;
}

bool is_irreflexive(const Relation& r) { return !first_loop(r).has_value(); }

bool is_strict_linear_order(const Relation& r) {
  return is_irreflexive(r) && is_transitive(r) && is_total(r);
}

bool is_linear_order(const Relation& r) {
  return is_reflexive(r) && is_transitive(r) && !first_symmetric_pair(r) && is_total(r);
}

bool is_interval_order(const Relation& r) {
  return is_irreflexive(r) && is_transitive(r) && successor_sets_form_chain(r);
}

bool is_semiorder(const Relation& r) {
  return is_interval_order(r) && three_plus_one_free(r, transpose(r));
}

bool is_strong_interval_order(const Relation& r) {
  return is_reflexive(r) && is_interval_order(without_diagonal(r));
}

ClassReport classify(const Relation& r) {
  ClassReport rep;
  const auto loop = first_loop(r);
  const auto sym = first_symmetric_pair(r);
  rep.irreflexive = !loop;
  rep.reflexive = is_reflexive(r);
  rep.transitive = is_transitive(r);
  rep.antisymmetric = !sym;
  rep.asymmetric = !loop && !sym;
  rep.total = is_total(r);
  const PropertyCheck acyc = is_acyclic(r);
  rep.acyclic = acyc.holds;
  const PropertyCheck tas = is_transitively_antisymmetric(r);
  rep.transitively_antisymmetric = tas.holds;
  rep.strict_partial_order = rep.irreflexive && rep.transitive;
  rep.partial_order = rep.reflexive && rep.transitive && rep.antisymmetric;
  rep.strict_linear_order = rep.strict_partial_order && rep.total;
  rep.linear_order = rep.partial_order && rep.total;
  rep.interval_order = rep.strict_partial_order && successor_sets_form_chain(r);
  rep.semiorder = rep.interval_order && three_plus_one_free(r, transpose(r));
  rep.strong_interval_order = rep.reflexive && is_interval_order(without_diagonal(r));

  auto loop_witness = [&]() -> std::optional<Witness> {
    if (!loop) return std::nullopt;
    return Witness{WitnessKind::Cycle, {r.label(*loop), r.label(*loop)}};
  };
  auto sym_witness = [&]() -> std::optional<Witness> {
    if (!sym) return std::nullopt;
    return Witness{WitnessKind::SymmetricPair, {r.label(sym->first), r.label(sym->second)}};
  };

  if (!rep.irreflexive) attach(rep, r, Property::Irreflexive, loop_witness());
  if (!rep.antisymmetric) attach(rep, r, Property::Antisymmetric, sym_witness());
  if (!rep.asymmetric) attach(rep, r, Property::Asymmetric, loop ? loop_witness() : sym_witness());
  if (!rep.acyclic) attach(rep, r, Property::Acyclic, acyc.witness);
  if (!rep.transitively_antisymmetric) attach(rep, r, Property::TransitivelyAntisymmetric, tas.witness);
  if (!rep.transitive) attach(rep, r, Property::Transitive, transitivity_witness(r));
  if (!rep.strict_partial_order) {
    attach(rep, r, Property::StrictPartialOrder, !rep.acyclic ? acyc.witness : transitivity_witness(r));
  }
  if (!rep.interval_order) {
    auto w = interval_witness(r);
    attach(rep, r, Property::IntervalOrder, w);
    if (!rep.semiorder) attach(rep, r, Property::Semiorder, w);
  } else if (!rep.semiorder) {
    if (auto v = first_semiorder_violation(r)) attach(rep, r, Property::Semiorder, to_witness(r, *v));
  }
  if (rep.reflexive && !rep.strong_interval_order) {
    attach(rep, r, Property::StrongIntervalOrder, interval_witness(without_diagonal(r)));
  }
  return rep;
}

namespace {

template <typename Visit>
void scan_interval_violations(const Relation& r, Visit&& visit) {
  const Relation c = transitive_closure(r);
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (r.contains(x, y)) continue;
      for (Index a = 0; a < n; ++a) {
        if (!r.contains(x, a)) continue;
        for (Index b = 0; b < n; ++b) {
          if (r.contains(b, y) && !c.contains(b, a)) {
            if (!visit(IntervalViolation{x, y, a, b})) return;
          }
        }
      }
    }
}

template <typename Visit>
void scan_semiorder_violations(const Relation& r, Visit&& visit) {
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (!r.contains(y, z)) continue;
        for (Index w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          if (!r.contains(x, w) && !r.contains(w, z)) {
            if (!visit(SemiorderViolation{x, y, z, w})) return;
          }
        }
      }
    }
}

}  // namespace

std::vector<IntervalViolation> interval_violations(const Relation& r) {
  std::vector<IntervalViolation> out;
  scan_interval_violations(r, [&](const IntervalViolation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::optional<IntervalViolation> first_interval_violation(const Relation& r) {
  std::optional<IntervalViolation> out;
  scan_interval_violations(r, [&](const IntervalViolation& v) {
    out = v;
    return false;
  });
  return out;
}

std::vector<SemiorderViolation> semiorder_violations(const Relation& r) {
  std::vector<SemiorderViolation> out;
  scan_semiorder_violations(r, [&](const SemiorderViolation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::optional<SemiorderViolation> first_semiorder_violation(const Relation& r) {
  std::optional<SemiorderViolation> out;
  scan_semiorder_violations(r, [&](const SemiorderViolation& v) {
    out = v;
    return false;
  });
  return out;
}

Witness to_witness(const Relation& r, const IntervalViolation& v) {
  return {WitnessKind::TwoPlusTwo, {r.label(v.x), r.label(v.y), r.label(v.a), r.label(v.b)}};
}

Witness to_witness(const Relation& r, const SemiorderViolation& v) {
  return {WitnessKind::ThreePlusOne, {r.label(v.x), r.label(v.y), r.label(v.z), r.label(v.w)}};
}

}  // namespace orderdim
