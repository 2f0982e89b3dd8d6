#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csnorm/rational.hpp"
#include "csnorm/slope.hpp"

namespace csnorm {

enum class FiniteType { C, D, T, O, I, Q };

FiniteType parse_finite_type(const std::string& text);
std::string finite_type_str(FiniteType type);

// A slope whose Dehn filling is exceptional, with the data needed by the
// gap bounds: the finite type for finite fillings, and for Seifert fillings
// the count A of non-abelian characters sending the class to +-I.
struct ExceptionalSlope {
  enum class Kind { cyclic, finite, seifert };

  Slope slope;
  Kind kind;
  std::optional<FiniteType> finite_type;  // kind == finite
  std::optional<Int> seifert_count;       // kind == seifert, A >= 0
  bool is_strict_boundary = false;

  static ExceptionalSlope cyclic(Slope s, bool strict = false);
  static ExceptionalSlope finite(Slope s, FiniteType type, bool strict = false);
  static ExceptionalSlope seifert(Slope s, Int count, bool strict = false);

  friend bool operator==(const ExceptionalSlope&, const ExceptionalSlope&) = default;
};

std::string kind_str(ExceptionalSlope::Kind kind);

// One strict boundary slope together with its aggregated weight: ideal
// points sharing a boundary slope are folded into a single positive
// rational weight, since only the per-slope totals enter any norm.
struct IdealSlopeDatum {
  Slope boundary_slope;
  Rat weight;

  friend bool operator==(const IdealSlopeDatum&, const IdealSlopeDatum&) = default;
};

struct MinNorm {
  Rat value;
  PeripheralClass witness;
};

// A norm curve summarized by finitely many weighted strict boundary slopes,
// plus fibre slopes (boundary but not strict) and exceptional-slope
// metadata. Immutable once constructed; construction validates every
// invariant and reports all violations at once.
class NormModel {
 public:
  NormModel(std::string name, bool hyperbolic, bool h1_z2_is_z2,
            std::vector<IdealSlopeDatum> ideal_slopes, std::vector<Slope> fibre_slopes,
            std::vector<ExceptionalSlope> exceptional_slopes);

  // Every failed invariant for the given data; empty means constructible.
  static std::vector<std::string> violations(
      const std::string& name, const std::vector<IdealSlopeDatum>& ideal_slopes,
      const std::vector<Slope>& fibre_slopes,
      const std::vector<ExceptionalSlope>& exceptional_slopes);

  const std::string& name() const { return name_; }
  bool hyperbolic() const { return hyperbolic_; }
  bool h1_z2_is_z2() const { return h1_z2_is_z2_; }

  // Sorted by slope, pairwise distinct.
  const std::vector<IdealSlopeDatum>& ideal_slopes() const { return ideal_slopes_; }
  const std::vector<Slope>& fibre_slopes() const { return fibre_slopes_; }
  const std::vector<ExceptionalSlope>& exceptional_slopes() const {
    return exceptional_slopes_;
  }

  const ExceptionalSlope* find_exceptional(const Slope& slope) const;
  bool is_ideal_slope(const Slope& slope) const;

  // Order of the pole of f_gamma at the ideal point(s) carried by `x`:
  // weight * delta(slope(gamma), boundary slope), scaled by the content of
  // gamma. Zero exactly when slope(gamma) equals the boundary slope.
  Rat pole_order(const IdealSlopeDatum& x, const PeripheralClass& gamma) const;

  // Culler-Shalen norm: the sum of pole orders over all ideal slopes.
  Rat norm(const PeripheralClass& gamma) const;

  // Minimum of the norm over nonzero classes, with a witness. The witness is
  // the lexicographically smallest canonical primitive pair attaining it.
  MinNorm min_norm() const;

  // max B - min B over the strict boundary slopes; requires 1/0 not in B.
  Rat diameter() const;

  friend bool operator==(const NormModel&, const NormModel&) = default;

 private:
  std::string name_;
  bool hyperbolic_;
  bool h1_z2_is_z2_;
  std::vector<IdealSlopeDatum> ideal_slopes_;
  std::vector<Slope> fibre_slopes_;
  std::vector<ExceptionalSlope> exceptional_slopes_;
};

}  // namespace csnorm
