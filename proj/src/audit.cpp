#include "orderdim/audit.hpp"

#include <algorithm>
#include <random>

#include "detail/json_io.hpp"
#include "orderdim/classify.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/realize.hpp"

namespace orderdim {
namespace {

constexpr std::size_t kExhaustiveCap = 6;

struct Failure {
  std::string detail;
  std::optional<Witness> witness;
};

using Outcome = std::optional<Failure>;

Outcome expect(bool ok, std::string detail) {
  if (ok) return std::nullopt;
  return Failure{std::move(detail), std::nullopt};
}

DecomposeOptions decompose_options(const AuditOptions& opts, std::size_t n) {
  DecomposeOptions d = opts.decompose;
  if (n <= kExhaustiveCap) d.exhaustive = true;
  return d;
}

Outcome check_extension(const Relation& r, const Relation& q, bool in_class, std::string_view cls) {
  if (!is_extension(r, q)) return Failure{"result does not extend the input", std::nullopt};
  return expect(in_class, "result is not " + std::string(cls));
}

Outcome check_decomposition(const Relation& r, PartnerClass cls, const AuditOptions& opts) {
  try {
    const Decomposition d = decompose(r, cls, decompose_options(opts, r.size()));
    return expect(d.verified && verify_decomposition(r, d), "decomposition failed re-verification");
  } catch (const Error& e) {
    if (e.code() != Errc::NoDecompositionFound) throw;
    return Failure{e.what(), std::nullopt};
  }
}

Outcome check_realizer(const Relation& r, MemberClass cls, const AuditOptions& opts) {
  try {
    const Realizer z = realizer(r, cls, decompose_options(opts, r.size()));
    if (auto check = verify_realizer(z); !check) return Failure{check.detail, std::nullopt};
    return expect(z.target == transitive_closure(r), "realizer target is not the transitive closure");
  } catch (const Error& e) {
    if (e.code() != Errc::MemberConstructionFailed) throw;
    return Failure{e.what(), std::nullopt};
  }
}

Outcome check_product(const Relation& r, const AuditOptions& opts) {
  const DimCertificate cert = order_dim(r, opts.dim);
  const std::vector<Relation>& family = cert.witness.members;
  const Relation strict = product_relation(family, ProductMode::Strict);
  const Relation closed = transitive_closure(r);
  auto diagonal = [&](Index x) {
    const std::vector<Index> coords(family.size(), x);
    return tuple_index(family, coords);
  };
  for (Index x = 0; x < r.size(); ++x)
    for (Index y = 0; y < r.size(); ++y) {
      if (closed.contains(x, y) != strict.contains(diagonal(x), diagonal(y))) {
        return Failure{"diagonal embedding disagrees on (" + r.label(x) + "," + r.label(y) + ")", std::nullopt};
      }
    }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Relation lin = product_linearization(family, i);
    if (!is_linear_order(lin)) return Failure{"linearization " + std::to_string(i) + " is not a linear order", std::nullopt};
    if (!strict.subset_of(lin)) {
      return Failure{"linearization " + std::to_string(i) + " misses a pair of the strict product", std::nullopt};
    }
  }
  return std::nullopt;
}

Outcome check_boxes(const Relation& r, const AuditOptions& opts) {
  const DimCertificate cert = interval_dim(r, opts.dim);
  const GeometricRep rep = box_embedding(r, cert.witness);
  return expect(verify_representation(rep) && (rep.intervals.empty() || rep.intervals.front().size() == cert.value.p),
                "box embedding failed its equivalence check");
}

Outcome run_check(const std::string& theorem, const Relation& r, const AuditOptions& opts) {
  if (theorem == "3.5") {
    const Relation q = interval_extension(r);
    return check_extension(r, q, is_interval_order(q), "an interval order");
  }
  if (theorem == "3.5-round") {
    const SaturationTrace trace = interval_extension_traced(r);
    if (!trace.rejected_round) return std::nullopt;
    return Failure{"adding a whole saturation round closed a cycle in the augmented relation",
                   trace.rejected_cycle};
  }
  if (theorem == "3.7") return check_decomposition(r, PartnerClass::IntervalOrder, opts);
  if (theorem == "3.7-literal") {
    const ReverseConstruction rc = reverse_construction(r, interval_extension(r), PartnerClass::IntervalOrder);
    if (rc.acyclic) return std::nullopt;
    return Failure{"reversing Q minus the closure gives a cyclic relation", rc.acyclic.witness};
  }
  if (theorem == "3.8") {
    const Relation q = semiorder_extension(r);
    return check_extension(r, q, is_semiorder(q), "a semiorder");
  }
  if (theorem == "3.9") return check_decomposition(r, PartnerClass::Semiorder, opts);
  if (theorem == "4.1") return check_realizer(r, MemberClass::IntervalOrder, opts);
  if (theorem == "4.5") return check_realizer(r, MemberClass::StrictLinear, opts);
  if (theorem == "4.9") return check_realizer(r, MemberClass::LinearInterval, opts);
  if (theorem == "4.10") return check_realizer(r, MemberClass::LinearSemiorder, opts);
  if (theorem == "4.11") return check_product(r, opts);
  if (theorem == "4.13") return check_boxes(r, opts);
  throw Error(Errc::InvalidArgument, "unknown theorem id '" + theorem + "'");
}

bool uses_decomposition(std::string_view theorem) {
  return theorem == "3.7" || theorem == "3.9" || theorem == "4.9" || theorem == "4.10";
}

}  // namespace

Relation random_dag(std::size_t n, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng() % (i + 1)]);
  Relation r = Relation::numbered(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1U) r.insert(perm[i], perm[j]);
  return r;
}

const std::vector<std::string>& audit_theorems() {
  static const std::vector<std::string> ids{"3.5", "3.5-round", "3.7", "3.7-literal", "3.8", "3.9",
                                            "4.1", "4.5",       "4.9", "4.10",        "4.11", "4.13"};
  return ids;
}

std::size_t AuditReport::passes() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; }));
}

bool AuditReport::has_reverified_counterexample() const {
  return std::any_of(counterexamples.begin(), counterexamples.end(), [](const auto& c) { return c.reverified; });
}

AuditReport run_audit(const AuditOptions& opts) {
  const auto& ids = audit_theorems();
  if (std::find(ids.begin(), ids.end(), opts.theorem) == ids.end()) {
    throw Error(Errc::InvalidArgument, "unknown theorem id '" + opts.theorem + "'");
  }
  AuditReport report;
  report.theorem = opts.theorem;
  report.n = opts.n;
  report.count = opts.count;
  report.seed = opts.seed;
  report.exhaustive = !uses_decomposition(opts.theorem) || opts.n <= kExhaustiveCap || opts.decompose.exhaustive;

  for (std::size_t i = 0; i < opts.count; ++i) {
    const Relation r = random_dag(opts.n, opts.seed, i);
    const Outcome failure = run_check(opts.theorem, r, opts);
    report.verdicts.push_back({i, !failure});
    if (!failure) continue;
    Counterexample c{i, to_document(r, opts.theorem + "#" + std::to_string(i)), failure->detail, failure->witness};
    c.reverified = reverify(opts, c);
    report.counterexamples.push_back(std::move(c));
  }
  return report;
}

bool reverify(const AuditOptions& opts, const Counterexample& c) {
  const Relation r = parse_relation(emit(c.document, OutputFormat::Json));
  return run_check(opts.theorem, r, opts).has_value();
}

std::string emit(const AuditReport& report, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("an audit report", format);
  using detail::Json;
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(Json{{"index", v.index}, {"pass", v.pass}});
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) {
    Json j{{"detail", c.detail},
           {"document", detail::to_json(c.document)},
           {"index", c.index},
           {"reverified", c.reverified}};
    if (c.witness) j["witness"] = detail::to_json(*c.witness);
    counterexamples.push_back(std::move(j));
  }
  return detail::dump(Json{{"count", report.count},
                           {"counterexamples", counterexamples},
                           {"exhaustive", report.exhaustive},
                           {"failures", report.count - report.passes()},
                           {"n", report.n},
                           {"passes", report.passes()},
                           {"seed", report.seed},
                           {"theorem", report.theorem},
                           {"verdicts", verdicts}});
}

}  // namespace orderdim
