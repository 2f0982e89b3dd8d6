#pragma once

#include <iosfwd>
#include <string>

#include "csnorm/rational.hpp"

namespace csnorm {

// A slope a/b in Q union {1/0}: a primitive coordinate pair on the boundary
// torus, canonicalized so that b > 0, or (a, b) = (1, 0) for the meridian
// slope. Two classes with proportional coordinates give the same slope.
class Slope {
 public:
  Slope(Int mu_coord, Int lambda_coord);  // canonicalizes; throws on (0, 0)

  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }

  // Text format: "a/b", plain integers read as "n/1", "1/0" is the meridian.
  static Slope parse(const std::string& text);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  bool is_infinite() const { return b_ == 0; }

  // The rational value a/b; only defined for finite slopes.
  Rat value() const;

  // Canonical text: "a" when b == 1, otherwise "a/b" (so "1/0" for infinity).
  std::string str() const;

  friend bool operator==(const Slope& lhs, const Slope& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend bool operator!=(const Slope& lhs, const Slope& rhs) { return !(lhs == rhs); }

 private:
  Int a_, b_;
};

// Orders finite slopes by value; the infinite slope sorts last.
bool operator<(const Slope& lhs, const Slope& rhs);

std::ostream& operator<<(std::ostream& os, const Slope& slope);

// An element a*mu + b*lambda of the peripheral lattice, kept exactly as
// given (no reduction, no sign normalization); (0, 0) is rejected.
class PeripheralClass {
 public:
  PeripheralClass(Int mu_coord, Int lambda_coord);

  static PeripheralClass meridian() { return PeripheralClass(1, 0); }
  static PeripheralClass longitude() { return PeripheralClass(0, 1); }
  static PeripheralClass from_slope(const Slope& slope) {
    return PeripheralClass(slope.a(), slope.b());
  }

  // Same text format as Slope, but coordinates are taken literally, so
  // "34/2" is twice the primitive class of slope 17.
  static PeripheralClass parse(const std::string& text);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  Slope slope() const { return Slope(a_, b_); }
  Int content() const;                // gcd(|a|, |b|) >= 1
  PeripheralClass primitive() const;  // class divided by its content

  std::string str() const;

  friend bool operator==(const PeripheralClass& lhs, const PeripheralClass& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend bool operator!=(const PeripheralClass& lhs, const PeripheralClass& rhs) {
    return !(lhs == rhs);
  }

 private:
  Int a_, b_;
};

std::ostream& operator<<(std::ostream& os, const PeripheralClass& gamma);

// An ordered pair of classes spanning a finite-index sublattice.
class SublatticeBasis {
 public:
  SublatticeBasis(PeripheralClass alpha, PeripheralClass beta);  // det != 0

  const PeripheralClass& alpha() const { return alpha_; }
  const PeripheralClass& beta() const { return beta_; }
  const Int& det() const { return det_; }
  Int index() const { return abs(det_); }

 private:
  PeripheralClass alpha_, beta_;
  Int det_;
};

// Minimal geometric intersection number |a*d - b*c| of two slopes.
Int delta(const Slope& s, const Slope& t);

// |slope of gamma in the basis (alpha, beta)|, computed at slope level as
// delta(slope(beta), gamma) / delta(slope(alpha), gamma); infinite when the
// denominator vanishes (gamma parallel to alpha).
ExtRat sublattice_slope_abs(const Slope& gamma, const SublatticeBasis& basis);

// Signed variant: the ratio u/v where the primitive representative of gamma
// is u*alpha + v*beta up to scale, with alpha, beta taken at slope level.
ExtRat sublattice_slope_signed(const Slope& gamma, const SublatticeBasis& basis);

// b * |r_gamma - a/b| for beta = a*mu + b*lambda with b > 0 (beta is reduced
// to its primitive part first, so the gap is slope-level). Agrees with
// sublattice_slope_abs(gamma, (mu, beta)) for finite gamma.
Rat meridian_form_gap(const Slope& gamma, const PeripheralClass& beta);

}  // namespace csnorm
