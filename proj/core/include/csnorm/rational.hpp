#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace csnorm {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational with positive denominator. Throws InputError on den == 0.
Rat make_rat(const Int& num, const Int& den);

// Strict base-10 integer parse: optional sign followed by digits, nothing else.
Int parse_int(const std::string& text);

// Accepts "p/q" or plain "p"; the result is reduced. Rejects zero denominators.
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rat& value);

// Decimal approximation with `digits` places, rounded half away from zero.
// Computed with integer arithmetic only.
std::string decimal_str(const Rat& value, unsigned digits);

// A rational extended with a single unsigned infinity. Infinity compares
// greater than every finite value and equal to itself.
class ExtRat {
 public:
  ExtRat(const Rat& value) : infinite_(false), value_(value) {}
  ExtRat(long value) : infinite_(false), value_(value) {}

  static ExtRat infinity() { return ExtRat(inf_tag{}); }

  bool is_infinite() const { return infinite_; }
  const Rat& finite() const;  // throws std::logic_error when infinite
  std::string str() const;

  friend bool operator==(const ExtRat& lhs, const ExtRat& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ && rhs.infinite_;
    return lhs.value_ == rhs.value_;
  }
  friend bool operator!=(const ExtRat& lhs, const ExtRat& rhs) { return !(lhs == rhs); }
  friend bool operator<(const ExtRat& lhs, const ExtRat& rhs) {
    if (lhs.infinite_) return false;
    if (rhs.infinite_) return true;
    return lhs.value_ < rhs.value_;
  }
  friend bool operator>(const ExtRat& lhs, const ExtRat& rhs) { return rhs < lhs; }
  friend bool operator<=(const ExtRat& lhs, const ExtRat& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const ExtRat& lhs, const ExtRat& rhs) { return !(lhs < rhs); }

 private:
  struct inf_tag {};
  explicit ExtRat(inf_tag) : infinite_(true) {}

  bool infinite_;
  Rat value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& value);

}  // namespace csnorm
