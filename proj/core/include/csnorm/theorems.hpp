#pragma once

#include <optional>
#include <vector>

#include "csnorm/norm_model.hpp"
#include "csnorm/rational.hpp"
#include "csnorm/slope.hpp"

namespace csnorm {

struct SlopeSigma {
  Slope slope;
  ExtRat sigma;  // delta(slope(beta), .) / delta(slope(alpha), .)
};

// Outcome of comparing the per-ideal-point pole-order ratios sigma_x against
// t = |beta| / |alpha|. Either the ratios straddle t (case 1, with the full
// partition), or every ideal slope satisfies sigma = t exactly (case 2,
// which forces exactly two strict boundary slopes).
struct DichotomyResult {
  Rat t;
  bool proportional = false;          // case 2
  std::vector<SlopeSigma> below;      // sigma < t
  std::vector<SlopeSigma> at;         // sigma = t (all entries in case 2)
  std::vector<SlopeSigma> above;      // sigma > t; infinite sigma lands here
  std::optional<Slope> gamma, delta;  // case 2: signed sublattice slopes -t, +t

  int case_number() const { return proportional ? 2 : 1; }
};

// alpha and beta must be nonzero with distinct slopes. Both are reduced to
// their primitive parts, so the result is slope-level.
DichotomyResult dichotomy(const NormModel& model, const PeripheralClass& alpha,
                          const PeripheralClass& beta);

struct Theorem1Entry {
  Slope slope;
  ExtRat sigma;
  std::optional<Rat> gap;  // |r_slope - r_beta| in meridian form, finite slopes
};

// The dichotomy enriched with the meridian-form gaps: when alpha is the
// meridian and beta = a*mu + b*lambda with b > 0, every sigma equals
// b * |r_slope - r_beta|, so sigma < t reads as a gap below t/b.
struct Theorem1Report {
  Rat t;
  int case_number = 1;
  bool meridian_form = false;
  std::optional<Rat> gap_bound;  // t / b
  std::vector<Theorem1Entry> gamma_side;  // sigma < t
  std::vector<Theorem1Entry> equal_side;  // sigma = t (case 1 only)
  std::vector<Theorem1Entry> delta_side;  // sigma > t
  // Case 2: the two strict boundary slopes, signed slopes -t and +t.
  std::optional<Slope> gamma, delta;
  std::optional<Rat> gamma_gap;  // r_beta - r_gamma (meridian form)
  std::optional<Rat> delta_gap;  // r_delta - r_beta
};

Theorem1Report theorem1_report(const NormModel& model, const PeripheralClass& alpha,
                               const PeripheralClass& beta);

struct CyclicGapReport {
  Rat t;
  std::vector<SlopeSigma> gamma_side;  // sigma < 1
  std::vector<SlopeSigma> delta_side;  // sigma > 1
  DichotomyResult dichotomy;
};

// Requires alpha and beta to be flagged cyclic in the model and not strict
// boundary classes. On a hyperbolic model with H^1(M, Z_2) = Z_2 a
// proportional outcome is impossible for a cyclic pair, so it is rejected
// as a model inconsistency ("dunfield_violation").
CyclicGapReport cyclic_gap_check(const NormModel& model, const PeripheralClass& alpha,
                                 const PeripheralClass& beta, bool h1_z2_is_z2);

struct FiniteBound {
  FiniteType type;
  Rat norm_bound;          // upper bound on |beta| given the minimal norm s_M
  std::vector<int> q_set;  // admissible sublattice indices
  Rat t_bound;             // upper bound on t = |beta| / |alpha|
};

// Gap bound for the six finite filling types. s_M must be at least 4 (a
// hyperbolic exterior has 4 <= 2|H_1(M, Z_2)| <= s_M) unless overridden.
FiniteBound finite_gap_bound(FiniteType type, const Rat& s_m, bool even_torsion,
                             bool allow_small_s_m = false);

// 1 + 2A/s0: gap bound near a small Seifert filling whose norm is s0 + 2A.
Rat seifert_gap(const Int& seifert_count, const Rat& s0);

struct DiamBound {
  Rat bound;
  Slope witness;
};

// max over strict boundary classes beta = a*mu + b*lambda of
// norm(beta) / (b * norm(mu)); the diameter of B strictly exceeds it.
DiamBound diam_lower_bound(const NormModel& model);

}  // namespace csnorm
