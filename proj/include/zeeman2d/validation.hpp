#pragma once

// Cross-checks between the exact routes, the reference coefficient table and
// the variational oracle.

#include <optional>
#include <string>
#include <vector>

#include "zeeman2d/exactmath.hpp"
#include "zeeman2d/oracle.hpp"
#include "zeeman2d/perturb.hpp"

namespace zeeman2d {

struct Table1Entry {
  int n = 1;
  int l = 0;
  std::string eps2_rational;
  std::string eps2_factorized;
  std::string eps4_rational;
  std::string eps4_factorized;
};

/// Reference eps2/eps4 values for 1 <= n <= 4 (factorized forms in
/// the notation of factorized_string).
const std::vector<Table1Entry>& table1_reference();

/// Computed counterpart of one table row.
Table1Entry table1_row(int n, int l);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> check_table1(const std::vector<Table1Entry>& reference = table1_reference());

/// eps2_integral == eps2_closed and eps4_sturmian == eps4_closed for n <= n_max.
std::vector<CheckResult> check_dual_routes(int n_max);

struct FitTolerances {
  double c0_abs = 1e-12;
  double c2_rel = 1e-6;
  double c4_rel = 1e-2;
  double odd_abs = 1e-10;
};

/// Oracle fits for one level: the even series plus an odd-augmented diagnostic.
struct OracleCheck {
  RadialLevel level{1, 0};
  FieldFitResult<Quad> even_fit;
  FieldFitResult<Quad> odd_fit;
  double c4_uncertainty = 0;
  FitTolerances tolerances;
  std::vector<CheckResult> verdicts;
  bool passed() const;
};

struct OracleOptions {
  int basis_size = 120;
  int grid_points = 11;
  Rational grid_scale = 1;
  unsigned max_threads = 0;
  FitTolerances tolerances;
};

/// Runs the fits, halving the grid on conditioning failure (up to three times).
OracleCheck check_oracle(const RadialLevel& level, const OracleOptions& options = {});

struct DisputedValueReport {
  Rational closed_form;
  Rational sturmian_sum;
  std::optional<double> oracle_value;
  std::optional<double> oracle_uncertainty;
  Rational literature = Rational(-153, 65536);
  /// |159 - 153| / 65536 / 2
  Rational decision_radius = Rational(3, 65536);
  bool exact_routes_agree = false;
  std::optional<bool> oracle_confirms_closed_form;
  std::optional<bool> literature_rejected;

  std::string verdict_line() const;
};

DisputedValueReport disputed_value_report(const std::optional<OracleCheck>& ground_state_oracle = std::nullopt);

struct ValidationOptions {
  int dual_route_max_n = 12;
  /// 0 skips the oracle; the disputed value is then left undecided.
  int oracle_max_n = 3;
  OracleOptions oracle;
  std::vector<Table1Entry> table1 = table1_reference();
};

struct ValidationReport {
  std::vector<CheckResult> table1;
  std::vector<CheckResult> dual_routes;
  std::vector<OracleCheck> oracle;
  DisputedValueReport disputed;
  bool passed() const;
  std::string json() const;
};

ValidationReport run_validation(const ValidationOptions& options = {});

/// Fit result as JSON: state, grid, energies, coefficients, tolerances, verdicts.
std::string oracle_check_json(const OracleCheck& check);

}  // namespace zeeman2d
