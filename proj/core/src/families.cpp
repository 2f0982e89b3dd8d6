#include "csnorm/families.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "csnorm/errors.hpp"
#include "csnorm/theorems.hpp"

namespace csnorm {

WeightSolution solve_weights(const std::vector<Slope>& strict_slopes,
                             const std::vector<std::pair<PeripheralClass, Rat>>& constraints) {
  const std::size_t cols = strict_slopes.size();
  const std::size_t rows = constraints.size();
  if (rows < cols) {
    throw ModelError("rank_deficient", "fewer norm constraints than strict slopes");
  }

  // Augmented matrix of norm(class_j) = sum_i w_i * content_j * delta(slope_j, slope_i).
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t j = 0; j < rows; ++j) {
    const PeripheralClass& cls = constraints[j].first;
    const Int content = cls.content();
    const Slope slope = cls.slope();
    for (std::size_t i = 0; i < cols; ++i) {
      m[j][i] = Rat(content * delta(slope, strict_slopes[i]));
    }
    m[j][cols] = constraints[j].second;
  }

  // Gauss-Jordan over the rationals.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Rat lead = m[rank][col];
    for (auto& cell : m[rank]) cell /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) {
        m[r][c] -= factor * m[rank][c];
      }
    }
    ++rank;
  }
  if (rank < cols) {
    throw ModelError("rank_deficient", "the norm constraints leave the weights underdetermined");
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) {
      throw ModelError("inconsistent_constraints",
                       "the norm constraints admit no exact weight solution");
    }
  }

  WeightSolution out;
  for (std::size_t i = 0; i < cols; ++i) {
    const Rat& w = m[i][cols];
    if (w < 0) {
      throw ModelError("negative_weight", "weight for slope " + strict_slopes[i].str() +
                                              " solves to " + rational_str(w));
    }
    if (w == 0) {
      out.dropped.push_back(strict_slopes[i]);
    } else {
      out.weights.push_back({strict_slopes[i], w});
    }
  }
  return out;
}

NormModel FamilySpec::build() const {
  std::vector<IdealSlopeDatum> data;
  std::vector<Slope> fibre = fibre_slopes;
  if (explicit_weights) {
    data = *explicit_weights;
  } else {
    WeightSolution solved = solve_weights(strict_slopes, published_norms);
    data = std::move(solved.weights);
    // A zero weight means the slope is not strict for this parameter.
    fibre.insert(fibre.end(), solved.dropped.begin(), solved.dropped.end());
  }
  return NormModel(name, hyperbolic, h1_z2_is_z2, std::move(data), std::move(fibre),
                   exceptional_slopes);
}

namespace {

FamilySpec pretzel_table_7() {
  FamilySpec spec;
  spec.name = "pretzel:-2,3,7";
  spec.strict_slopes = {Slope(16, 1), Slope(20, 1), Slope(37, 2)};
  spec.explicit_weights = std::vector<IdealSlopeDatum>{
      {Slope(16, 1), Rat(2)}, {Slope(20, 1), Rat(2)}, {Slope(37, 2), Rat(4)}};
  spec.fibre_slopes = {Slope::longitude()};
  spec.published_norms = {{PeripheralClass::meridian(), Rat(12)},
                          {PeripheralClass(17, 1), Rat(20)},
                          {PeripheralClass(18, 1), Rat(12)},
                          {PeripheralClass(19, 1), Rat(12)}};
  spec.exceptional_slopes = {ExceptionalSlope::cyclic(Slope::meridian()),
                             ExceptionalSlope::finite(Slope(17, 1), FiniteType::I),
                             ExceptionalSlope::cyclic(Slope(18, 1)),
                             ExceptionalSlope::cyclic(Slope(19, 1))};
  return spec;
}

FamilySpec pretzel_table_9() {
  FamilySpec spec;
  spec.name = "pretzel:-2,3,9";
  spec.strict_slopes = {Slope(16, 1), Slope(24, 1), Slope(67, 3)};
  spec.explicit_weights = std::vector<IdealSlopeDatum>{
      {Slope(16, 1), Rat(2)}, {Slope(24, 1), Rat(2)}, {Slope(67, 3), Rat(4)}};
  spec.fibre_slopes = {Slope::longitude()};
  spec.published_norms = {{PeripheralClass::meridian(), Rat(16)},
                          {PeripheralClass(22, 1), Rat(20)},
                          {PeripheralClass(23, 1), Rat(24)}};
  spec.exceptional_slopes = {ExceptionalSlope::cyclic(Slope::meridian()),
                             ExceptionalSlope::finite(Slope(22, 1), FiniteType::O),
                             ExceptionalSlope::finite(Slope(23, 1), FiniteType::I)};
  return spec;
}

struct PretzelFormulas {
  Rat s0, norm_b1, norm_b2;  // |mu|, |2n+4|, |2n+5|
  Int a1, a2;
  Rat diam, bound;
};

PretzelFormulas pretzel_formulas(long n) {
  const Int N(n);
  const bool div3 = (n % 3 == 0);
  PretzelFormulas f;
  if (n > 0) {
    f.s0 = div3 ? Rat(3 * N - 11) : Rat(3 * (N - 3));
    f.norm_b1 = div3 ? Rat(6 * N - 34) : Rat(6 * (N - 5));
    f.norm_b2 = div3 ? Rat(7 * N - 39) : Rat(7 * N - 37);
    f.a1 = div3 ? Int((3 * N - 23) / 2) : Int(3 * (N - 7) / 2);
    f.a2 = 2 * (N - 7);
    f.diam = Rat(2 * (N - 5));
    f.bound = div3 ? make_rat(6 * N * N - 60 * N + 146, 3 * N - 11)
                   : make_rat(6 * N * N - 56 * N + 126, 3 * N - 9);
  } else {
    f.s0 = div3 ? Rat(1 - 3 * N) : Rat(3 * (1 - N));
    f.norm_b1 = div3 ? Rat(2 * (7 - 3 * N)) : Rat(6 * (3 - N));
    f.norm_b2 = div3 ? Rat(13 - 7 * N) : Rat(15 - 7 * N);
    f.a1 = div3 ? Int((13 - 3 * N) / 2) : Int(3 * (5 - N) / 2);
    f.a2 = 2 * (3 - N);
    f.diam = make_rat(6 * N - 2 * N * N - 2, N);  // 6 - 2n - 2/n
    f.bound = div3 ? make_rat(6 * N * N - 14 * N, 1 - 3 * N)
                   : make_rat(6 * N * N - 18 * N + 8, 3 - 3 * N);
  }
  return f;
}

void require_pretzel_parameter(long n) {
  if (n == -1 || n == -3) {
    throw InputError("ambiguous_strictness",
                     "pretzel parameter n = " + std::to_string(n) +
                         ": the longitude is also a strict boundary slope there, which "
                         "leaves the weights underdetermined");
  }
  if (n % 2 == 0 || n == 1 || n == 3 || n == 5) {
    throw InputError("unsupported_parameter",
                     "pretzel parameter must be odd and outside {1, 3, 5}; got " +
                         std::to_string(n));
  }
}

}  // namespace

FamilySpec pretzel_spec(long n) {
  require_pretzel_parameter(n);
  if (n == 7) return pretzel_table_7();
  if (n == 9) return pretzel_table_9();

  const Int N(n);
  const PretzelFormulas f = pretzel_formulas(n);
  FamilySpec spec;
  spec.name = "pretzel:-2,3," + std::to_string(n);
  if (n > 0) {
    spec.strict_slopes = {Slope(16, 1), Slope(2 * N + 6, 1),
                          Slope(2 * (N * N - N - 5), N - 3)};
  } else {
    spec.strict_slopes = {Slope(10, 1), Slope(2 * N + 6, 1),
                          Slope(2 * (N + 1) * (N + 1), N)};
  }
  spec.fibre_slopes = {Slope::longitude()};
  spec.published_norms = {{PeripheralClass::meridian(), f.s0},
                          {PeripheralClass(2 * N + 4, 1), f.norm_b1},
                          {PeripheralClass(2 * N + 5, 1), f.norm_b2}};
  spec.exceptional_slopes = {ExceptionalSlope::cyclic(Slope::meridian()),
                             ExceptionalSlope::seifert(Slope(2 * N + 4, 1), f.a1),
                             ExceptionalSlope::seifert(Slope(2 * N + 5, 1), f.a2)};
  return spec;
}

NormModel pretzel_model(long n) { return pretzel_spec(n).build(); }

FamilySpec twist_spec(long n) {
  if (n == 0 || n == 1) {
    throw InputError("unsupported_parameter",
                     "twist parameter must avoid {0, 1}; got " + std::to_string(n));
  }
  const Int N(n);
  FamilySpec spec;
  spec.name = "twist:" + std::to_string(n);
  spec.exceptional_slopes.push_back(ExceptionalSlope::cyclic(Slope::meridian()));
  if (n >= 2) {
    spec.strict_slopes = {Slope(0, 1), Slope(-4, 1), Slope(-(4 * N + 2), 1)};
    spec.published_norms = {{PeripheralClass::meridian(), Rat(4 * N - 2)},
                            {PeripheralClass(-1, 1), Rat(2 * (8 * N - 3))},
                            {PeripheralClass(-2, 1), Rat(8 * (2 * N - 1))},
                            {PeripheralClass(-3, 1), Rat(2 * (8 * N - 5))}};
    spec.exceptional_slopes.push_back(ExceptionalSlope::seifert(Slope(-1, 1), 6 * N - 2));
    spec.exceptional_slopes.push_back(ExceptionalSlope::seifert(Slope(-2, 1), 6 * N - 3));
    spec.exceptional_slopes.push_back(ExceptionalSlope::seifert(Slope(-3, 1), 6 * N - 4));
  } else {
    spec.strict_slopes = {Slope(0, 1), Slope(-4, 1), Slope(-4 * N, 1)};
    spec.published_norms = {{PeripheralClass::meridian(), Rat(-4 * N)},
                            {PeripheralClass(-1, 1), Rat(-16 * N)},
                            {PeripheralClass(-2, 1), Rat(-16 * N)},
                            {PeripheralClass(-3, 1), Rat(-16 * N)}};
    for (long s : {-1L, -2L, -3L}) {
      spec.exceptional_slopes.push_back(ExceptionalSlope::seifert(Slope(s, 1), -6 * N));
    }
  }
  return spec;
}

NormModel twist_model(long n) { return twist_spec(n).build(); }

NormModel figure_eight_model() { return twist_model(-1); }

namespace {

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("bad_arguments", "cannot parse " + what + ": \"" + text + "\"");
  }
}

}  // namespace

bool looks_like_builtin(const std::string& name) {
  return name == "figure8" || name.rfind("pretzel:", 0) == 0 || name.rfind("twist:", 0) == 0;
}

NormModel builtin_model(const std::string& name) {
  if (name == "figure8") return figure_eight_model();
  if (name.rfind("pretzel:", 0) == 0) {
    const std::string params = name.substr(8);
    const auto c1 = params.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : params.find(',', c1 + 1);
    if (c2 == std::string::npos || params.find(',', c2 + 1) != std::string::npos) {
      throw InputError("unknown_model",
                       "pretzel models are written pretzel:-2,3,<n>; got \"" + name + "\"");
    }
    if (params.substr(0, c1) != "-2" || params.substr(c1 + 1, c2 - c1 - 1) != "3") {
      throw InputError("unsupported_parameter",
                       "only the (-2,3,n) pretzel family is built in; got \"" + name + "\"");
    }
    return pretzel_model(parse_long(params.substr(c2 + 1), "pretzel parameter"));
  }
  if (name.rfind("twist:", 0) == 0) {
    return twist_model(parse_long(name.substr(6), "twist parameter"));
  }
  throw InputError("unknown_model", "no built-in model named \"" + name + "\"");
}

std::vector<std::pair<std::string, std::string>> builtin_descriptions() {
  return {
      {"pretzel:-2,3,<n>",
       "(-2,3,n) pretzel knot; n odd and outside {1,3,5}; n = -1, -3 refused"},
      {"twist:<n>", "twist knot K_n; any integer n except 0 and 1"},
      {"figure8", "the figure-eight knot (same model as twist:-1)"},
  };
}

std::vector<NormModel> bundled_models() {
  std::vector<NormModel> out;
  for (long n : {7L, 9L, 11L, 15L, -5L, -9L}) out.push_back(pretzel_model(n));
  for (long n : {2L, 3L, -2L, -1L}) out.push_back(twist_model(n));
  return out;
}

bool SweepRow::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool SweepReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass(); }) &&
         std::all_of(cross_checks.begin(), cross_checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::optional<std::pair<long, CheckResult>> SweepReport::first_failure() const {
  for (const auto& row : rows) {
    for (const auto& check : row.checks) {
      if (!check.pass) return std::make_pair(row.n, check);
    }
  }
  for (const auto& check : cross_checks) {
    if (!check.pass) return std::make_pair(0L, check);
  }
  return std::nullopt;
}

namespace {

void check(SweepRow& row, const std::string& name, bool ok, const std::string& detail) {
  row.checks.push_back({name, ok, ok ? std::string() : detail});
}

// Checks shared by both families: the published norms round-trip through the
// solved weights, the meridian realizes the minimal norm, every Seifert
// filling satisfies norm = s0 + 2A and has a strict boundary slope within
// 1 + 2A/s0, and the diameter strictly exceeds its lower bound.
void run_common_checks(SweepRow& row, const FamilySpec& spec, const NormModel& model,
                       const Rat& expected_diam, const Rat& expected_bound) {
  bool positive = true;
  for (const auto& datum : model.ideal_slopes()) positive = positive && datum.weight > 0;
  check(row, "weights_positive", positive, "solved weight <= 0");

  bool roundtrip = true;
  std::string detail;
  for (const auto& [cls, value] : spec.published_norms) {
    if (model.norm(cls) != value) {
      roundtrip = false;
      detail = "norm(" + cls.str() + ") != " + rational_str(value);
      break;
    }
  }
  check(row, "norms_roundtrip", roundtrip, detail);

  row.s0 = spec.published_norms.front().second;
  const MinNorm mn = model.min_norm();
  check(row, "min_norm_is_s0", mn.value == row.s0,
        "min norm " + rational_str(mn.value) + " != " + rational_str(row.s0));

  for (const auto& exc : model.exceptional_slopes()) {
    if (exc.kind != ExceptionalSlope::Kind::seifert) continue;
    const PeripheralClass cls = PeripheralClass::from_slope(exc.slope);
    const Rat expected = row.s0 + 2 * Rat(*exc.seifert_count);
    check(row, "seifert_norm_identity[" + exc.slope.str() + "]", model.norm(cls) == expected,
          "norm != s0 + 2A at " + exc.slope.str());

    const Rat gap_bound = seifert_gap(*exc.seifert_count, row.s0);
    bool witness = false;
    for (const auto& datum : model.ideal_slopes()) {
      if (datum.boundary_slope.is_infinite()) continue;
      if (meridian_form_gap(datum.boundary_slope, cls) < gap_bound) {
        witness = true;
        break;
      }
    }
    check(row, "seifert_gap_witness[" + exc.slope.str() + "]", witness,
          "no strict boundary slope within 1 + 2A/s0 of " + exc.slope.str());
  }

  row.diam = model.diameter();
  row.bound = diam_lower_bound(model).bound;
  row.difference = row.diam - row.bound;
  check(row, "diam_formula", row.diam == expected_diam,
        "diameter " + rational_str(row.diam) + " != " + rational_str(expected_diam));
  check(row, "bound_formula", row.bound == expected_bound,
        "bound " + rational_str(row.bound) + " != " + rational_str(expected_bound));
  check(row, "diam_exceeds_bound", row.diam > row.bound, "diameter does not exceed the bound");
}

}  // namespace

SweepRow verify_pretzel(long n) {
  SweepRow row;
  row.n = n;
  row.div3 = (n % 3 == 0);
  try {
    const FamilySpec spec = pretzel_spec(n);
    const NormModel model = spec.build();
    const PretzelFormulas f = pretzel_formulas(n);
    row.norms = {{"norm[2n+4]", f.norm_b1}, {"norm[2n+5]", f.norm_b2}};
    run_common_checks(row, spec, model, f.diam, f.bound);
  } catch (const std::exception& e) {
    row.checks.push_back({"build", false, e.what()});
  }
  return row;
}

SweepRow verify_twist(long n) {
  SweepRow row;
  row.n = n;
  try {
    const FamilySpec spec = twist_spec(n);
    const NormModel model = spec.build();
    const Int N(n);
    Rat diam, bound;
    if (n >= 2) {
      diam = Rat(4 * N + 2);
      bound = make_rat(16 * N * (N - 1), 4 * N - 2);
    } else {
      diam = Rat(4 - 4 * N);
      bound = Rat(-4 * N);
    }
    for (std::size_t i = 1; i < spec.published_norms.size(); ++i) {
      row.norms.emplace_back("norm[" + spec.published_norms[i].first.slope().str() + "]",
                             spec.published_norms[i].second);
    }
    run_common_checks(row, spec, model, diam, bound);
  } catch (const std::exception& e) {
    row.checks.push_back({"build", false, e.what()});
  }
  return row;
}

namespace {

template <typename Fn>
std::vector<SweepRow> run_rows(const std::vector<long>& params, Fn verify, unsigned threads) {
  std::vector<SweepRow> rows(params.size());
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, params.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < params.size(); i = next.fetch_add(1)) {
      rows[i] = verify(params[i]);
    }
  };
  if (count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  return rows;
}

void monotone_check(SweepReport& report, const std::string& name,
                    const std::vector<const SweepRow*>& rows, bool increasing) {
  bool ok = true;
  std::string detail;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool step = increasing ? rows[i - 1]->difference < rows[i]->difference
                                 : rows[i - 1]->difference > rows[i]->difference;
    if (!step) {
      ok = false;
      detail = "difference not strictly " + std::string(increasing ? "increasing" : "decreasing") +
               " between n = " + std::to_string(rows[i - 1]->n) + " and n = " +
               std::to_string(rows[i]->n);
      break;
    }
  }
  report.cross_checks.push_back({name, ok, detail});
}

void limit_check(SweepReport& report, const std::string& name, const Rat& limit, bool below) {
  bool ok = true;
  std::string detail;
  for (const auto& row : report.rows) {
    const bool fine = below ? row.difference < limit : row.difference > limit;
    if (!fine) {
      ok = false;
      detail = "difference at n = " + std::to_string(row.n) + " crosses " + rational_str(limit);
      break;
    }
  }
  report.cross_checks.push_back({name, ok, detail});
}

}  // namespace

SweepReport sweep_pretzel(long lo, long hi, unsigned threads) {
  if (lo > hi) throw InputError("bad_arguments", "empty sweep range");
  std::vector<long> params;
  for (long n = lo; n <= hi; ++n) {
    if (n % 2 == 0) continue;
    require_pretzel_parameter(n);  // refuses {1, 3, 5, -1, -3} inside the range
    params.push_back(n);
  }
  if (params.empty()) throw InputError("bad_arguments", "no odd parameters in range");

  SweepReport report;
  report.rows = run_rows(params, verify_pretzel, threads);

  // The difference diam - bound is monotone toward its limit within each
  // divisibility-by-3 branch; the interleaved sequence is not monotone.
  std::vector<const SweepRow*> div3, nondiv3;
  for (const auto& row : report.rows) (row.div3 ? div3 : nondiv3).push_back(&row);
  const bool positive = params.front() > 0;
  if (nondiv3.size() > 1) monotone_check(report, "difference_monotone_nondiv3", nondiv3, true);
  if (div3.size() > 1) monotone_check(report, "difference_monotone_div3", div3, true);
  if (positive) {
    limit_check(report, "difference_below_8/3", make_rat(8, 3), true);
  } else {
    limit_check(report, "difference_above_2", Rat(2), false);
  }
  return report;
}

SweepReport sweep_twist(long lo, long hi, unsigned threads) {
  if (lo > hi) throw InputError("bad_arguments", "empty sweep range");
  if (lo <= 0 && hi >= 0) {
    throw InputError("unsupported_parameter", "twist sweep ranges must not contain 0 or 1");
  }
  if (lo <= 1 && hi >= 1) {
    throw InputError("unsupported_parameter", "twist sweep ranges must not contain 0 or 1");
  }
  std::vector<long> params;
  for (long n = lo; n <= hi; ++n) params.push_back(n);

  SweepReport report;
  report.rows = run_rows(params, verify_twist, threads);
  if (params.front() >= 2) {
    std::vector<const SweepRow*> all;
    for (const auto& row : report.rows) all.push_back(&row);
    if (all.size() > 1) monotone_check(report, "difference_monotone", all, false);
    limit_check(report, "difference_above_4", Rat(4), false);
  } else {
    bool constant = true;
    std::string detail;
    for (const auto& row : report.rows) {
      if (row.difference != 4) {
        constant = false;
        detail = "difference at n = " + std::to_string(row.n) + " is not 4";
        break;
      }
    }
    report.cross_checks.push_back({"difference_constant_4", constant, detail});
  }
  return report;
}

}  // namespace csnorm
