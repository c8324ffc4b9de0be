#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderdim/dimension.hpp"
#include "orderdim/extend.hpp"
#include "orderdim/io.hpp"
#include "orderdim/relation.hpp"

namespace orderdim {

/// Instance `index` of a seeded stream: a random permutation, then each
/// forward pair under it kept with probability 1/2. Labels x1..xn.
Relation random_dag(std::size_t n, std::uint64_t seed, std::size_t index);

/// Claims the audit can check. Besides the theorem ids, "3.5-round" checks
/// that a whole saturation round keeps acyclicity and "3.7-literal" checks
/// that reversing Q \ C for the saturated Q is acyclic. Both fail on some
/// inputs.
const std::vector<std::string>& audit_theorems();

struct AuditOptions {
  std::string theorem;
  std::size_t n = 6;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  DecomposeOptions decompose;
  DimOptions dim;
};

struct AuditVerdict {
  std::size_t index = 0;
  bool pass = true;
};

struct Counterexample {
  std::size_t index = 0;
  RelationDocument document;
  std::string detail;
  std::optional<Witness> witness;
  /// Set once the emitted document, parsed back, fails the check again.
  bool reverified = false;
};

struct AuditReport {
  std::string theorem;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// True when every decomposition ran without a node budget.
  bool exhaustive = false;
  std::vector<AuditVerdict> verdicts;
  std::vector<Counterexample> counterexamples;

  std::size_t passes() const;
  bool has_reverified_counterexample() const;
};

/// Errors: InvalidArgument for an unknown theorem id.
AuditReport run_audit(const AuditOptions& opts);

/// Serializes the counterexample's document, parses it back and re-runs the check.
bool reverify(const AuditOptions& opts, const Counterexample& c);

std::string emit(const AuditReport& report, OutputFormat format);

}  // namespace orderdim
