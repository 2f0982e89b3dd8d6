#include "csnorm/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "csnorm/errors.hpp"

namespace csnorm {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw InputError("bad_rational", "zero denominator");
  }
  Rat value(num, den);
  value.canonicalize();
  return value;
}

Int parse_int(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) {
    throw InputError("bad_integer", "not an integer: \"" + text + "\"");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InputError("bad_integer", "not an integer: \"" + text + "\"");
    }
  }
  // mpz_set_str accepts "-" but not a leading "+"
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw InputError("bad_rational", "zero denominator in \"" + text + "\"");
  }
  return make_rat(num, den);
}

std::string rational_str(const Rat& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_str(const Rat& value, unsigned digits) {
  const bool negative = sgn(value) < 0;
  Int num = abs(value.get_num());
  const Int& den = value.get_den();

  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round(|v| * 10^digits), half away from zero
  Int scaled = (2 * num * scale + den) / (2 * den);

  Int whole = scaled / scale;
  Int frac = scaled % scale;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

const Rat& ExtRat::finite() const {
  if (infinite_) {
    throw std::logic_error("infinite value has no finite part");
  }
  return value_;
}

std::string ExtRat::str() const {
  return infinite_ ? "inf" : rational_str(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtRat& value) {
  return os << value.str();
}

}  // namespace csnorm
