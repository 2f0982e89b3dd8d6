#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csnorm/norm_model.hpp"
#include "csnorm/rational.hpp"
#include "csnorm/slope.hpp"

namespace csnorm {

// Result of inverting the norm identity |gamma| = sum_i w_i * delta(gamma, b_i)
// for the weights. Slopes whose weight solves to exactly zero are dropped
// and reported (they are not strict for that parameter).
struct WeightSolution {
  std::vector<IdealSlopeDatum> weights;
  std::vector<Slope> dropped;
};

// Exact rational solve of the constraint system. Throws ModelError with code
// "rank_deficient" when underdetermined, "negative_weight" when a weight
// solves negative, and "inconsistent_constraints" when an overdetermined
// system has no exact solution.
WeightSolution solve_weights(const std::vector<Slope>& strict_slopes,
                             const std::vector<std::pair<PeripheralClass, Rat>>& constraints);

// Generator data for one parametric knot model: strict slopes, the known
// norms used as solve constraints, and the exceptional-slope metadata.
struct FamilySpec {
  std::string name;
  std::vector<Slope> strict_slopes;
  std::vector<std::pair<PeripheralClass, Rat>> published_norms;
  std::vector<Slope> fibre_slopes;
  std::vector<ExceptionalSlope> exceptional_slopes;
  // When set, used verbatim instead of solving (the tabulated models).
  std::optional<std::vector<IdealSlopeDatum>> explicit_weights;
  bool hyperbolic = true;
  bool h1_z2_is_z2 = true;

  NormModel build() const;
};

// (-2,3,n) pretzel knots, n odd and not 1, 3, 5. n in {-1, -3} is refused
// ("ambiguous_strictness"): there the longitude is strict as well, which
// leaves the weight system underdetermined.
FamilySpec pretzel_spec(long n);
NormModel pretzel_model(long n);

// Twist knots K_n, n not 0 or 1. K_{-1} is the figure-eight knot.
FamilySpec twist_spec(long n);
NormModel twist_model(long n);
NormModel figure_eight_model();

// Built-in model names: "pretzel:-2,3,<n>", "twist:<n>", "figure8".
bool looks_like_builtin(const std::string& name);
NormModel builtin_model(const std::string& name);
std::vector<std::pair<std::string, std::string>> builtin_descriptions();

// A fixed assortment of family instances used by verification suites.
std::vector<NormModel> bundled_models();

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // empty when passing
};

// Everything verified for a single family parameter, plus the row data the
// sweep report prints.
struct SweepRow {
  long n = 0;
  Rat s0, diam, bound, difference;
  std::vector<std::pair<std::string, Rat>> norms;  // labeled published norms
  std::vector<CheckResult> checks;
  bool div3 = false;  // monotonicity branch for pretzels

  bool pass() const;
};

SweepRow verify_pretzel(long n);
SweepRow verify_twist(long n);

struct SweepReport {
  std::vector<SweepRow> rows;            // ordered by n
  std::vector<CheckResult> cross_checks; // monotonicity and limit bounds
  bool pass() const;
  // First failing (n, check); n = 0 marks a cross check.
  std::optional<std::pair<long, CheckResult>> first_failure() const;
};

// Verify a whole parameter range. Ranges must not straddle the excluded
// parameters (pretzel: even n and {1, 3, 5, -1, -3}; twist: {0, 1}).
// threads = 0 picks the hardware concurrency.
SweepReport sweep_pretzel(long lo, long hi, unsigned threads = 0);
SweepReport sweep_twist(long lo, long hi, unsigned threads = 0);

}  // namespace csnorm
