#include "orderdim/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "orderdim/classify.hpp"

namespace orderdim {
namespace {

std::optional<Witness> class_witness(const Relation& r, Property p) {
  const ClassReport report = classify(r);
  if (auto it = report.witnesses.find(p); it != report.witnesses.end()) return it->second;
  if (auto it = report.witnesses.find(Property::Transitive); it != report.witnesses.end()) return it->second;
  if (auto it = report.witnesses.find(Property::Irreflexive); it != report.witnesses.end()) return it->second;
  return std::nullopt;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

bool shape_ok(const GeometricRep& rep, std::size_t coords) {
  const std::size_t n = rep.source.size();
  if (rep.intervals.size() != n) return false;
  const bool unit = rep.kind == RepKind::UnitInterval || rep.kind == RepKind::UnitTriangle;
  for (const auto& boxes : rep.intervals) {
    if (boxes.size() != coords) return false;
    for (const OpenInterval& iv : boxes) {
      if (!(iv.left < iv.right)) return false;
      if (unit && iv.right - iv.left != Rational(1)) return false;
    }
  }
  return true;
}

std::size_t checked_tuple_count(std::span<const Relation> family, std::size_t cap) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "product of an empty family");
  std::size_t total = 1;
  for (const Relation& r : family) {
    if (r.size() == 0) return 0;
    if (total > cap / r.size()) {
      throw Error(Errc::SizeLimit, "tuple space exceeds the cap of " + std::to_string(cap));
    }
    total *= r.size();
  }
  if (total > cap) throw Error(Errc::SizeLimit, "tuple space exceeds the cap of " + std::to_string(cap));
  return total;
}

Relation tuple_ground_set(std::span<const Relation> family, std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (Index t = 0; t < count; ++t) {
    std::string label = "(";
    const auto coords = tuple_coordinates(family, t);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) label += ',';
      label += family[i].label(coords[i]);
    }
    labels.push_back(label + ")");
  }
  return Relation(std::move(labels));
}

void verify_or_throw(const GeometricRep& rep) {
  if (!verify_representation(rep)) {
    throw Error(Errc::InternalOperatorFailure,
                std::string(to_string(rep.kind)) + " representation failed its equivalence check");
  }
}

}  // namespace

std::string to_string(const Rational& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::Interval: return "interval";
    case RepKind::UnitInterval: return "unit";
    case RepKind::Triangle: return "triangle";
    case RepKind::UnitTriangle: return "unit-triangle";
    case RepKind::Box: return "box";
  }
  return "?";
}

GeometricRep interval_representation(const Relation& q) {
  if (!is_interval_order(q)) {
    throw Error(Errc::NotIntervalOrder, "relation is not an interval order", class_witness(q, Property::IntervalOrder));
  }
  const std::size_t n = q.size();
  std::vector<std::vector<bool>> pred(n, std::vector<bool>(n, false));
  for (auto [u, v] : q.pairs()) pred[v][u] = true;

  // Predecessor sets of an interval order are nested, so their sizes order them.
  std::vector<std::vector<bool>> chain = pred;
  std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) {
    return std::count(a.begin(), a.end(), true) < std::count(b.begin(), b.end(), true);
  });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  const auto k = static_cast<std::int64_t>(chain.size());

  GeometricRep rep;
  rep.kind = RepKind::Interval;
  rep.source = q;
  for (Index x = 0; x < n; ++x) {
    const auto a = std::find(chain.begin(), chain.end(), pred[x]) - chain.begin();
    std::int64_t b = k;
    for (std::int64_t j = 0; j < k; ++j)
      if (chain[static_cast<std::size_t>(j)][x]) {
        b = j;
        break;
      }
    rep.intervals.push_back({{Rational(a), Rational(b)}});
  }
  verify_or_throw(rep);
  return rep;
}

GeometricRep unit_interval_representation(const Relation& s) {
  if (!is_semiorder(s)) {
    throw Error(Errc::NotSemiorder, "relation is not a semiorder", class_witness(s, Property::Semiorder));
  }
  // Left endpoints scaled by m = n+1: d_y - d_x >= m for (x,y) in s, and
  // |d_x - d_y| <= m - 1 for incomparable x, y. Edge u->v bounds d_v - d_u.
  const std::size_t n = s.size();
  const auto m = static_cast<std::int64_t>(n + 1);
  struct Edge {
    Index from, to;
    std::int64_t weight;
  };
  std::vector<Edge> edges;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      if (s.contains(x, y)) edges.push_back({y, x, -m});
      else if (!s.contains(y, x)) edges.push_back({y, x, m - 1});
    }
  std::vector<std::int64_t> d(n, 0);
  bool changed = true;
  for (std::size_t round = 0; changed; ++round) {
    if (round > n) throw Error(Errc::InfeasibleSystem, "unit interval constraints have a negative cycle");
    changed = false;
    for (const Edge& e : edges)
      if (d[e.from] + e.weight < d[e.to]) {
        d[e.to] = d[e.from] + e.weight;
        changed = true;
      }
  }
  const std::int64_t lo = n ? *std::min_element(d.begin(), d.end()) : 0;

  GeometricRep rep;
  rep.kind = RepKind::UnitInterval;
  rep.source = s;
  for (Index x = 0; x < n; ++x) {
    const Rational left(d[x] - lo, m);
    rep.intervals.push_back({{left, left + 1}});
  }
  verify_or_throw(rep);
  return rep;
}

GeometricRep triangle_representation(const Relation& r, const Decomposition& d) {
  if (!verify_decomposition(r, d)) throw Error(Errc::InvalidArgument, "decomposition does not match the relation");
  const bool unit = d.partner_class == PartnerClass::Semiorder;
  GeometricRep base = unit ? unit_interval_representation(d.partner) : interval_representation(d.partner);

  GeometricRep rep;
  rep.kind = unit ? RepKind::UnitTriangle : RepKind::Triangle;
  rep.source = transitive_closure(r);
  rep.apex.assign(r.size(), Rational(0));
  const auto seq = linear_order_sequence(d.linear_part);
  for (std::size_t rank = 0; rank < seq.size(); ++rank) rep.apex[seq[rank]] = Rational(static_cast<std::int64_t>(rank));
  rep.intervals = std::move(base.intervals);
  verify_or_throw(rep);
  return rep;
}

GeometricRep triangle_representation(const Relation& r, PartnerClass partner, const DecomposeOptions& opts) {
  return triangle_representation(r, decompose(r, partner, opts));
}

GeometricRep box_embedding(const Relation& r, const Realizer& realizer) {
  if (auto check = is_acyclic(r); !check) {
    throw Error(Errc::CyclicInput, "box embedding needs an acyclic relation", check.witness);
  }
  const Relation target = transitive_closure(r);
  for (const Relation& m : realizer.members) require_same_ground_set(target, m);
  if (auto check = verify_realizer(target, realizer.members, realizer.member_class); !check) {
    throw Error(Errc::RealizerInvalid, check.detail);
  }
  GeometricRep rep;
  rep.kind = RepKind::Box;
  rep.source = target;
  rep.intervals.assign(r.size(), {});
  for (const Relation& m : realizer.members) {
    const GeometricRep coord = interval_representation(m);
    for (Index x = 0; x < r.size(); ++x) rep.intervals[x].push_back(coord.intervals[x].front());
  }
  verify_or_throw(rep);
  return rep;
}

bool verify_representation(const GeometricRep& rep) {
  const Relation& src = rep.source;
  const std::size_t n = src.size();
  const bool triangle = rep.kind == RepKind::Triangle || rep.kind == RepKind::UnitTriangle;
  const std::size_t coords = rep.kind == RepKind::Box ? (n ? rep.intervals.front().size() : 0) : 1;
  if (rep.kind == RepKind::Box && n && coords == 0) return false;
  if (!shape_ok(rep, coords)) return false;
  if (triangle ? rep.apex.size() != n : !rep.apex.empty()) return false;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      bool ahead = true;
      for (std::size_t i = 0; i < coords && ahead; ++i) ahead = precedes(rep.intervals[x][i], rep.intervals[y][i]);
      if (triangle) ahead = ahead && rep.apex[x] < rep.apex[y];
      if (ahead != src.contains(x, y)) return false;
    }
  return true;
}

std::vector<Index> tuple_coordinates(std::span<const Relation> family, Index t) {
  std::vector<Index> coords(family.size());
  for (std::size_t i = family.size(); i-- > 0;) {
    coords[i] = t % family[i].size();
    t /= family[i].size();
  }
  return coords;
}

Index tuple_index(std::span<const Relation> family, std::span<const Index> coords) {
  Index t = 0;
  for (std::size_t i = 0; i < family.size(); ++i) t = t * family[i].size() + coords[i];
  return t;
}

Relation product_relation(std::span<const Relation> family, ProductMode mode, std::size_t cap) {
  const std::size_t count = checked_tuple_count(family, cap);
  std::vector<Relation> parts;
  for (const Relation& r : family) {
    parts.push_back(mode == ProductMode::Strict ? asymmetric_part(r) : reflexive_closure(asymmetric_part(r)));
  }
  Relation out = tuple_ground_set(family, count);
  std::vector<std::vector<Index>> coords;
  for (Index t = 0; t < count; ++t) coords.push_back(tuple_coordinates(family, t));
  for (Index u = 0; u < count; ++u)
    for (Index v = 0; v < count; ++v) {
      bool related = true;
      for (std::size_t i = 0; i < parts.size() && related; ++i) related = parts[i].contains(coords[u][i], coords[v][i]);
      if (related) out.insert(u, v);
    }
  return out;
}

Relation product_linearization(std::span<const Relation> family, std::size_t i, std::size_t cap) {
  const std::size_t count = checked_tuple_count(family, cap);
  if (i >= family.size()) {
    throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
  }
  std::vector<std::vector<std::size_t>> rank;
  for (const Relation& r : family) {
    const auto seq = linear_order_sequence(r);
    std::vector<std::size_t> rk(r.size());
    for (std::size_t k = 0; k < seq.size(); ++k) rk[seq[k]] = k;
    rank.push_back(std::move(rk));
  }
  Relation out = tuple_ground_set(family, count);
  std::vector<std::vector<Index>> coords;
  for (Index t = 0; t < count; ++t) coords.push_back(tuple_coordinates(family, t));
  for (Index u = 0; u < count; ++u)
    for (Index v = 0; v < count; ++v) {
      const auto& x = coords[u];
      const auto& y = coords[v];
      bool related;
      if (x[i] != y[i]) {
        related = rank[i][x[i]] < rank[i][y[i]];
      } else {
        std::size_t g = 0;
        while (g < x.size() && x[g] == y[g]) ++g;
        related = g == x.size() || rank[g][y[g]] < rank[g][x[g]];
      }
      if (related) out.insert(u, v);
    }
  return out;
}

}  // namespace orderdim
