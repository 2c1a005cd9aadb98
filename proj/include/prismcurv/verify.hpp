#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prismcurv/prism.hpp"

namespace prismcurv {

/// Outcome of one identity check over a population of cells.
struct CheckResult {
  std::string name;
  /// Hard checks fail the run; report-only checks never do.
  bool hard = true;
  bool skipped = false;
  std::size_t population = 0;
  std::size_t violations = 0;
  double max_error = 0;
  std::string notes;

  bool failed() const noexcept { return hard && !skipped && violations > 0; }
};

struct GaussBonnetBlock {
  double alternating_sum = 0;
  std::int64_t chi = 0;
  std::int64_t sum_snapshot_chi = 0;
  std::int64_t sum_pair_chi = 0;
  std::int64_t residual_c1 = 0;
  std::int64_t residual_c2 = 0;
  std::optional<std::int64_t> oracle_chi;
  std::string oracle_note;
};

struct MonotonicityStats {
  std::size_t spatial_edges = 0;
  std::size_t qualifying = 0;
  std::size_t excluded_not_persistent = 0;
  std::size_t excluded_foreign_parallel = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;
  /// Qualifying edges where "equality ⇔ every prism coface has a temporal
  /// side edge" does not hold.
  std::size_t equality_rule_mismatches = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  GaussBonnetBlock gauss_bonnet;
  MonotonicityStats monotonicity;

  bool hard_failure() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  double weighted_tolerance = 1e-9;
  double exact_tolerance = 1e-12;
  /// Largest complex the inclusion–exclusion oracle will attempt.
  std::size_t oracle_cap = 5000;
  double scale_factor = 3.0;
};

/// Runs every identity check on `pc` and on its unit-weight copy.
VerificationReport run_suite(const PrismComplex& pc, const SuiteOptions& options = {});

/// Alternating Forman sum, Euler characteristics and residuals (unit weights).
GaussBonnetBlock gauss_bonnet_report(const PrismComplex& pc, std::size_t oracle_cap = 5000);

/// χ of the prism complex by inclusion–exclusion over the cover made of the
/// snapshots and the per-pair prism stacks. nullopt when the complex has
/// more than `size_cap` simplices.
std::optional<std::int64_t> inclusion_exclusion_oracle(const PrismComplex& pc, std::size_t size_cap = 5000);

/// Monotonicity bookkeeping on a unit-weight prism complex; also returns the
/// per-edge check as a CheckResult.
CheckResult check_monotonicity(const PrismComplex& unit_pc, MonotonicityStats& stats);

/// Process exit status for a finished report: 0, or 1 on a hard failure.
int exit_code_for(const VerificationReport& report);

}  // namespace prismcurv
