#include "csnorm/slope.hpp"

#include <ostream>
#include <utility>

#include "csnorm/errors.hpp"

namespace csnorm {

namespace {

Int gcd_abs(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::pair<Int, Int> parse_pair(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return {parse_int(text), Int(1)};
  }
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string pair_str(const Int& a, const Int& b) {
  if (b == 1) return a.get_str();
  return a.get_str() + "/" + b.get_str();
}

}  // namespace

Slope::Slope(Int mu_coord, Int lambda_coord) : a_(std::move(mu_coord)), b_(std::move(lambda_coord)) {
  if (a_ == 0 && b_ == 0) {
    throw InputError("zero_class", "slope of the zero class is undefined");
  }
  const Int g = gcd_abs(a_, b_);
  a_ /= g;
  b_ /= g;
  if (b_ < 0 || (b_ == 0 && a_ < 0)) {
    a_ = -a_;
    b_ = -b_;
  }
}

Slope Slope::parse(const std::string& text) {
  auto [a, b] = parse_pair(text);
  if (a == 0 && b == 0) {
    throw InputError("bad_slope", "\"" + text + "\" is not a slope");
  }
  return Slope(std::move(a), std::move(b));
}

Rat Slope::value() const {
  if (is_infinite()) {
    throw std::logic_error("the 1/0 slope has no rational value");
  }
  return make_rat(a_, b_);
}

std::string Slope::str() const { return pair_str(a_, b_); }

bool operator<(const Slope& lhs, const Slope& rhs) {
  if (lhs.is_infinite()) return false;
  if (rhs.is_infinite()) return true;
  return lhs.a() * rhs.b() < rhs.a() * lhs.b();
}

std::ostream& operator<<(std::ostream& os, const Slope& slope) { return os << slope.str(); }

PeripheralClass::PeripheralClass(Int mu_coord, Int lambda_coord)
    : a_(std::move(mu_coord)), b_(std::move(lambda_coord)) {
  if (a_ == 0 && b_ == 0) {
    throw InputError("zero_class", "the zero peripheral class is not allowed");
  }
}

PeripheralClass PeripheralClass::parse(const std::string& text) {
  auto [a, b] = parse_pair(text);
  if (a == 0 && b == 0) {
    throw InputError("bad_class", "\"" + text + "\" is the zero class");
  }
  return PeripheralClass(std::move(a), std::move(b));
}

Int PeripheralClass::content() const { return gcd_abs(a_, b_); }

PeripheralClass PeripheralClass::primitive() const {
  const Int g = content();
  return PeripheralClass(a_ / g, b_ / g);
}

std::string PeripheralClass::str() const { return pair_str(a_, b_); }

std::ostream& operator<<(std::ostream& os, const PeripheralClass& gamma) {
  return os << gamma.str();
}

SublatticeBasis::SublatticeBasis(PeripheralClass alpha, PeripheralClass beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)),
      det_(alpha_.a() * beta_.b() - alpha_.b() * beta_.a()) {
  if (det_ == 0) {
    throw InputError("degenerate_basis", "basis classes are linearly dependent");
  }
}

Int delta(const Slope& s, const Slope& t) {
  return abs(s.a() * t.b() - s.b() * t.a());
}

ExtRat sublattice_slope_abs(const Slope& gamma, const SublatticeBasis& basis) {
  const Int num = delta(basis.beta().slope(), gamma);
  const Int den = delta(basis.alpha().slope(), gamma);
  if (den == 0) return ExtRat::infinity();
  return ExtRat(make_rat(num, den));
}

ExtRat sublattice_slope_signed(const Slope& gamma, const SublatticeBasis& basis) {
  const Slope sa = basis.alpha().slope();
  const Slope sb = basis.beta().slope();
  const Int num = gamma.a() * sb.b() - gamma.b() * sb.a();
  const Int den = sa.a() * gamma.b() - sa.b() * gamma.a();
  if (den == 0) return ExtRat::infinity();
  return ExtRat(make_rat(num, den));
}

Rat meridian_form_gap(const Slope& gamma, const PeripheralClass& beta) {
  if (gamma.is_infinite()) {
    throw InputError("infinite_slope", "the meridian-form gap is undefined for slope 1/0");
  }
  if (beta.b() <= 0) {
    throw InputError("bad_class",
                     "meridian form needs beta = a*mu + b*lambda with b > 0, got " + beta.str());
  }
  const Slope sb = beta.slope();  // primitive, b > 0 preserved
  return make_rat(abs(sb.b() * gamma.a() - sb.a() * gamma.b()), gamma.b());
}

}  // namespace csnorm
