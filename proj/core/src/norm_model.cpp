#include "csnorm/norm_model.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "csnorm/errors.hpp"

namespace csnorm {

FiniteType parse_finite_type(const std::string& text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'C': return FiniteType::C;
      case 'D': return FiniteType::D;
      case 'T': return FiniteType::T;
      case 'O': return FiniteType::O;
      case 'I': return FiniteType::I;
      case 'Q': return FiniteType::Q;
    }
  }
  throw InputError("bad_finite_type",
                   "finite type must be one of C, D, T, O, I, Q; got \"" + text + "\"");
}

std::string finite_type_str(FiniteType type) {
  switch (type) {
    case FiniteType::C: return "C";
    case FiniteType::D: return "D";
    case FiniteType::T: return "T";
    case FiniteType::O: return "O";
    case FiniteType::I: return "I";
    case FiniteType::Q: return "Q";
  }
  return "?";
}

ExceptionalSlope ExceptionalSlope::cyclic(Slope s, bool strict) {
  return {std::move(s), Kind::cyclic, std::nullopt, std::nullopt, strict};
}

ExceptionalSlope ExceptionalSlope::finite(Slope s, FiniteType type, bool strict) {
  return {std::move(s), Kind::finite, type, std::nullopt, strict};
}

ExceptionalSlope ExceptionalSlope::seifert(Slope s, Int count, bool strict) {
  return {std::move(s), Kind::seifert, std::nullopt, std::move(count), strict};
}

std::string kind_str(ExceptionalSlope::Kind kind) {
  switch (kind) {
    case ExceptionalSlope::Kind::cyclic: return "cyclic";
    case ExceptionalSlope::Kind::finite: return "finite";
    case ExceptionalSlope::Kind::seifert: return "seifert";
  }
  return "?";
}

namespace {

bool slope_less(const Slope& lhs, const Slope& rhs) { return lhs < rhs; }

template <typename T, typename KeyFn>
void sort_by_slope(std::vector<T>& items, KeyFn key) {
  std::stable_sort(items.begin(), items.end(),
                   [&](const T& a, const T& b) { return slope_less(key(a), key(b)); });
}

}  // namespace

std::vector<std::string> NormModel::violations(
    const std::string& name, const std::vector<IdealSlopeDatum>& ideal_slopes,
    const std::vector<Slope>& fibre_slopes,
    const std::vector<ExceptionalSlope>& exceptional_slopes) {
  std::vector<std::string> out;
  if (name.empty()) {
    out.push_back("empty_name: model name required");
  }

  std::vector<Slope> seen;
  for (const auto& datum : ideal_slopes) {
    if (std::find(seen.begin(), seen.end(), datum.boundary_slope) != seen.end()) {
      out.push_back("duplicate_ideal_slope: " + datum.boundary_slope.str() + " listed twice");
    } else {
      seen.push_back(datum.boundary_slope);
    }
    if (datum.weight <= 0) {
      out.push_back("nonpositive weight: " + rational_str(datum.weight) + " at ideal slope " +
                    datum.boundary_slope.str());
    }
  }
  if (seen.size() < 2) {
    out.push_back("lemma_two_violation: fewer than two distinct strict boundary slopes");
  }

  for (const auto& fibre : fibre_slopes) {
    if (std::find(seen.begin(), seen.end(), fibre) != seen.end()) {
      out.push_back("fibre_overlap: fibre slope " + fibre.str() + " is also an ideal slope");
    }
  }

  std::vector<Slope> seen_exceptional;
  for (const auto& exc : exceptional_slopes) {
    if (std::find(seen_exceptional.begin(), seen_exceptional.end(), exc.slope) !=
        seen_exceptional.end()) {
      out.push_back("duplicate_exceptional_slope: " + exc.slope.str() + " listed twice");
    } else {
      seen_exceptional.push_back(exc.slope);
    }
    if (exc.kind == ExceptionalSlope::Kind::finite && !exc.finite_type) {
      out.push_back("missing_finite_type: exceptional slope " + exc.slope.str());
    }
    if (exc.kind == ExceptionalSlope::Kind::seifert) {
      if (!exc.seifert_count) {
        out.push_back("missing_seifert_count: exceptional slope " + exc.slope.str());
      } else if (*exc.seifert_count < 0) {
        out.push_back("negative_seifert_count: A < 0 at exceptional slope " + exc.slope.str());
      }
    }
    if (!exc.is_strict_boundary &&
        std::find(seen.begin(), seen.end(), exc.slope) != seen.end()) {
      out.push_back("strictness_conflict: exceptional slope " + exc.slope.str() +
                    " flagged non-strict but appears as an ideal slope");
    }
  }
  return out;
}

NormModel::NormModel(std::string name, bool hyperbolic, bool h1_z2_is_z2,
                     std::vector<IdealSlopeDatum> ideal_slopes, std::vector<Slope> fibre_slopes,
                     std::vector<ExceptionalSlope> exceptional_slopes)
    : name_(std::move(name)), hyperbolic_(hyperbolic), h1_z2_is_z2_(h1_z2_is_z2),
      ideal_slopes_(std::move(ideal_slopes)), fibre_slopes_(std::move(fibre_slopes)),
      exceptional_slopes_(std::move(exceptional_slopes)) {
  auto problems = violations(name_, ideal_slopes_, fibre_slopes_, exceptional_slopes_);
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
  sort_by_slope(ideal_slopes_, [](const IdealSlopeDatum& d) { return d.boundary_slope; });
  std::sort(fibre_slopes_.begin(), fibre_slopes_.end(), slope_less);
  fibre_slopes_.erase(std::unique(fibre_slopes_.begin(), fibre_slopes_.end()),
                      fibre_slopes_.end());
  sort_by_slope(exceptional_slopes_, [](const ExceptionalSlope& e) { return e.slope; });
}

const ExceptionalSlope* NormModel::find_exceptional(const Slope& slope) const {
  for (const auto& exc : exceptional_slopes_) {
    if (exc.slope == slope) return &exc;
  }
  return nullptr;
}

bool NormModel::is_ideal_slope(const Slope& slope) const {
  for (const auto& datum : ideal_slopes_) {
    if (datum.boundary_slope == slope) return true;
  }
  return false;
}

Rat NormModel::pole_order(const IdealSlopeDatum& x, const PeripheralClass& gamma) const {
  return x.weight * Rat(gamma.content() * delta(gamma.slope(), x.boundary_slope));
}

Rat NormModel::norm(const PeripheralClass& gamma) const {
  const Slope slope = gamma.slope();
  Rat sum = 0;
  // Every term picks up the same class-content factor, so scale once.
  for (const auto& datum : ideal_slopes_) {
    sum += datum.weight * Rat(delta(slope, datum.boundary_slope));
  }
  return sum * Rat(gamma.content());
}

MinNorm NormModel::min_norm() const {
  // Common-denominator integer weights: norm(a, b) * scale is an integer.
  Int scale = 1;
  for (const auto& datum : ideal_slopes_) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), datum.weight.get_den().get_mpz_t());
  }
  std::vector<Int> w, p, q;
  for (const auto& datum : ideal_slopes_) {
    w.push_back(datum.weight.get_num() * (scale / datum.weight.get_den()));
    p.push_back(datum.boundary_slope.a());
    q.push_back(datum.boundary_slope.b());
  }
  const std::size_t m = w.size();

  // Growth constant: norm(gamma) >= G * max(|a|, |b|) for every nonzero
  // class. For any two ideal slopes (p1, q1), (p2, q2) the pair of values
  // u = a*q1 - b*p1, v = a*q2 - b*p2 determines (a, b) through a matrix of
  // determinant +-delta, so max(|u|, |v|) >= max(|a|, |b|) * delta / C with
  // C = max(|p1| + |p2|, |q1| + |q2|). Take the best pair.
  Rat growth = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Int d = abs(p[i] * q[j] - q[i] * p[j]);
      const Int c = std::max(abs(p[i]) + abs(p[j]), abs(q[i]) + abs(q[j]));
      const Rat w_min = std::min(ideal_slopes_[i].weight, ideal_slopes_[j].weight);
      const Rat g = w_min * make_rat(d, c);
      if (g > growth) growth = g;
    }
  }

  Int best_scaled;  // best norm * scale
  Int best_a, best_b;
  bool have_best = false;

  Int acc, term, ca, cb;
  auto consider = [&](long a, long b) {
    ca = a;
    cb = b;
    acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
      mpz_mul(term.get_mpz_t(), ca.get_mpz_t(), q[i].get_mpz_t());
      mpz_submul(term.get_mpz_t(), cb.get_mpz_t(), p[i].get_mpz_t());
      mpz_abs(term.get_mpz_t(), term.get_mpz_t());
      mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), w[i].get_mpz_t());
    }
    if (!have_best || acc < best_scaled ||
        (acc == best_scaled && (ca < best_a || (ca == best_a && cb < best_b)))) {
      best_scaled = acc;
      best_a = ca;
      best_b = cb;
      have_best = true;
    }
  };

  // Expanding search over canonical primitive pairs ordered by
  // k = max(|a|, b). A level is safe to skip only once k * G exceeds the
  // best value, and ties are still possible at k * G == best, so keep
  // scanning until the strict inequality holds.
  for (long k = 1;; ++k) {
    if (k == 1) consider(1, 0);
    for (long a = -k; a <= k; ++a) {
      if (std::gcd(std::abs(a), k) == 1) consider(a, k);
    }
    for (long b = 1; b < k; ++b) {
      if (std::gcd(k, b) == 1) {
        consider(k, b);
        consider(-k, b);
      }
    }
    if (growth > 0 && Rat(k + 1) * growth > make_rat(best_scaled, scale)) {
      break;
    }
  }

  return MinNorm{make_rat(best_scaled, scale), PeripheralClass(best_a, best_b)};
}

Rat NormModel::diameter() const {
  std::optional<Rat> lo, hi;
  for (const auto& datum : ideal_slopes_) {
    if (datum.boundary_slope.is_infinite()) {
      throw ModelError("meridian_boundary_slope",
                       "meridian boundary slope: 1/0 is a strict boundary slope, "
                       "the diameter is undefined");
    }
    const Rat r = datum.boundary_slope.value();
    if (!lo || r < *lo) lo = r;
    if (!hi || r > *hi) hi = r;
  }
  return *hi - *lo;
}

}  // namespace csnorm
