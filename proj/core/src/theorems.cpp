#include "csnorm/theorems.hpp"

#include <algorithm>

#include "csnorm/errors.hpp"

namespace csnorm {

namespace {

void require_distinct_slopes(const Slope& sa, const Slope& sb) {
  if (sa == sb) {
    throw InputError("equal_slopes", "alpha and beta must have distinct slopes");
  }
}

std::optional<Rat> meridian_gap(const Slope& slope, const PeripheralClass& beta_prim) {
  if (slope.is_infinite()) return std::nullopt;
  return meridian_form_gap(slope, beta_prim);
}

}  // namespace

DichotomyResult dichotomy(const NormModel& model, const PeripheralClass& alpha,
                          const PeripheralClass& beta) {
  const PeripheralClass a = alpha.primitive();
  const PeripheralClass b = beta.primitive();
  const Slope sa = a.slope();
  const Slope sb = b.slope();
  require_distinct_slopes(sa, sb);

  DichotomyResult result;
  result.t = model.norm(b) / model.norm(a);
  for (const auto& datum : model.ideal_slopes()) {
    const Int num = delta(sb, datum.boundary_slope);
    const Int den = delta(sa, datum.boundary_slope);
    const ExtRat sigma = den == 0 ? ExtRat::infinity() : ExtRat(make_rat(num, den));
    if (sigma < ExtRat(result.t)) {
      result.below.push_back({datum.boundary_slope, sigma});
    } else if (sigma == ExtRat(result.t)) {
      result.at.push_back({datum.boundary_slope, sigma});
    } else {
      result.above.push_back({datum.boundary_slope, sigma});
    }
  }

  result.proportional = result.below.empty() && result.above.empty();
  if (result.proportional) {
    // sigma = t cuts out two lines through the origin in class coordinates,
    // so at most two distinct slopes can sit at t; with all of them there,
    // the model has exactly two, one on each line.
    const SublatticeBasis basis(a, b);
    for (const auto& entry : result.at) {
      const ExtRat s = sublattice_slope_signed(entry.slope, basis);
      if (!s.is_infinite() && s.finite() < 0) {
        result.gamma = entry.slope;
      } else {
        result.delta = entry.slope;
      }
    }
  }
  return result;
}

Theorem1Report theorem1_report(const NormModel& model, const PeripheralClass& alpha,
                               const PeripheralClass& beta) {
  const PeripheralClass a = alpha.primitive();
  const PeripheralClass b = beta.primitive();
  const auto d = dichotomy(model, a, b);

  Theorem1Report report;
  report.t = d.t;
  report.case_number = d.case_number();
  report.meridian_form = a.slope().is_infinite() && !b.slope().is_infinite();
  if (report.meridian_form) {
    report.gap_bound = d.t / Rat(b.slope().b());
  }

  auto fill = [&](const std::vector<SlopeSigma>& side, std::vector<Theorem1Entry>& out) {
    for (const auto& entry : side) {
      Theorem1Entry row{entry.slope, entry.sigma, std::nullopt};
      if (report.meridian_form) row.gap = meridian_gap(entry.slope, b);
      out.push_back(std::move(row));
    }
  };

  if (!d.proportional) {
    fill(d.below, report.gamma_side);
    fill(d.at, report.equal_side);
    fill(d.above, report.delta_side);
    return report;
  }

  if (model.ideal_slopes().size() != 2 || !d.gamma || !d.delta) {
    throw ModelError("proportionality_violation",
                     "proportional pole orders require exactly two strict boundary slopes");
  }
  report.gamma = d.gamma;
  report.delta = d.delta;
  if (report.meridian_form) {
    const Rat r_beta = b.slope().value();
    if (!d.gamma->is_infinite()) report.gamma_gap = r_beta - d.gamma->value();
    if (!d.delta->is_infinite()) report.delta_gap = d.delta->value() - r_beta;
  }
  return report;
}

CyclicGapReport cyclic_gap_check(const NormModel& model, const PeripheralClass& alpha,
                                 const PeripheralClass& beta, bool h1_z2_is_z2) {
  for (const auto* cls : {&alpha, &beta}) {
    const Slope slope = cls->slope();
    const ExceptionalSlope* exc = model.find_exceptional(slope);
    if (!exc || exc->kind != ExceptionalSlope::Kind::cyclic) {
      throw InputError("not_cyclic", "slope " + slope.str() + " is not flagged cyclic");
    }
    if (exc->is_strict_boundary || model.is_ideal_slope(slope)) {
      throw InputError("strict_boundary_class",
                       "slope " + slope.str() + " is a strict boundary class");
    }
  }

  auto d = dichotomy(model, alpha, beta);
  if (d.proportional && h1_z2_is_z2 && model.hyperbolic()) {
    throw ModelError("dunfield_violation",
                     "pole orders of a cyclic pair are proportional on a hyperbolic model "
                     "with H^1(M, Z_2) = Z_2; the model data is inconsistent");
  }

  CyclicGapReport report{d.t, {}, {}, {}};
  const ExtRat one{Rat(1)};
  for (const auto& bucket : {d.below, d.at, d.above}) {
    for (const auto& entry : bucket) {
      if (entry.sigma < one) report.gamma_side.push_back(entry);
      if (entry.sigma > one) report.delta_side.push_back(entry);
    }
  }
  report.dichotomy = std::move(d);
  return report;
}

FiniteBound finite_gap_bound(FiniteType type, const Rat& s_m, bool even_torsion,
                             bool allow_small_s_m) {
  if (s_m <= 0) {
    throw InputError("bad_arguments", "s_M must be positive");
  }
  if (s_m < 4 && !allow_small_s_m) {
    throw ModelError("s_m_below_four",
                     "minimal norm " + rational_str(s_m) +
                         " is below 4, impossible for a hyperbolic exterior "
                         "(4 <= 2|H_1(M, Z_2)| <= s_M)");
  }

  FiniteBound out{type, Rat(0), {}, Rat(0)};
  switch (type) {
    case FiniteType::C:
      out.norm_bound = s_m;
      out.q_set = {1};
      out.t_bound = 1;
      break;
    case FiniteType::D:
    case FiniteType::Q:
      out.norm_bound = 2 * s_m;
      out.q_set = {1, 2};
      out.t_bound = 2;
      break;
    case FiniteType::T: {
      out.norm_bound = s_m + 4;
      out.q_set = {1, 2, 3};
      const Rat ratio = out.norm_bound / s_m;
      out.t_bound = std::min(Rat(2), ratio);
      break;
    }
    case FiniteType::I:
      out.norm_bound = s_m + 8;
      out.q_set = {1, 2, 3, 5};
      out.t_bound = 3;
      break;
    case FiniteType::O:
      if (even_torsion) {
        out.norm_bound = s_m + 12;
        out.q_set = {1, 2, 3};
        out.t_bound = 3;
      } else {
        out.norm_bound = s_m + 6;
        out.q_set = {2, 4};
        out.t_bound = make_rat(5, 2);
      }
      break;
  }
  return out;
}

Rat seifert_gap(const Int& seifert_count, const Rat& s0) {
  if (seifert_count < 0) {
    throw InputError("bad_arguments", "the character count A must be nonnegative");
  }
  if (s0 <= 0) {
    throw InputError("bad_arguments", "s0 must be positive");
  }
  return 1 + 2 * Rat(seifert_count) / s0;
}

DiamBound diam_lower_bound(const NormModel& model) {
  const Rat mu_norm = model.norm(PeripheralClass::meridian());
  std::optional<DiamBound> best;
  for (const auto& datum : model.ideal_slopes()) {
    if (datum.boundary_slope.is_infinite()) {
      throw ModelError("meridian_boundary_slope",
                       "meridian boundary slope: 1/0 is a strict boundary slope, "
                       "the diameter bound is undefined");
    }
    const PeripheralClass cls = PeripheralClass::from_slope(datum.boundary_slope);
    const Rat bound = model.norm(cls) / (Rat(cls.b()) * mu_norm);
    if (!best || bound > best->bound) {
      best = DiamBound{bound, datum.boundary_slope};
    }
  }
  return *best;
}

}  // namespace csnorm
