#include <doctest.h>

#include <algorithm>

#include "csnorm/errors.hpp"
#include "csnorm/families.hpp"
#include "csnorm/theorems.hpp"
#include "test_support.hpp"

using namespace csnorm;
using test_support::rat;

namespace {

std::vector<Slope> slopes_of(const std::vector<SlopeSigma>& entries) {
  std::vector<Slope> out;
  for (const auto& e : entries) out.push_back(e.slope);
  return out;
}

bool contains(const std::vector<Slope>& slopes, const Slope& s) {
  return std::find(slopes.begin(), slopes.end(), s) != slopes.end();
}

const ExtRat& sigma_of(const std::vector<SlopeSigma>& entries, const Slope& s) {
  for (const auto& e : entries) {
    if (e.slope == s) return e.sigma;
  }
  REQUIRE(false);
  return entries.front().sigma;
}

}  // namespace

TEST_CASE("dichotomy on (-2,3,7)") {
  const NormModel model = pretzel_model(7);
  const PeripheralClass mu = PeripheralClass::meridian();

  SUBCASE("beta = 19: t = 1, slope 20 sits exactly at t") {
    const auto d = dichotomy(model, mu, PeripheralClass(19, 1));
    CHECK_FALSE(d.proportional);
    CHECK(d.t == rat(1));
    CHECK(slopes_of(d.below) == std::vector<Slope>{Slope(37, 2)});
    CHECK(sigma_of(d.below, Slope(37, 2)) == ExtRat(rat(1, 2)));
    CHECK(slopes_of(d.at) == std::vector<Slope>{Slope(20, 1)});
    CHECK(slopes_of(d.above) == std::vector<Slope>{Slope(16, 1)});
    CHECK(sigma_of(d.above, Slope(16, 1)) == ExtRat(rat(3)));
  }

  SUBCASE("beta = 18: both 16 and 20 lie above t") {
    const auto d = dichotomy(model, mu, PeripheralClass(18, 1));
    CHECK(d.t == rat(1));
    CHECK(slopes_of(d.below) == std::vector<Slope>{Slope(37, 2)});
    CHECK(d.at.empty());
    CHECK(slopes_of(d.above) == std::vector<Slope>{Slope(16, 1), Slope(20, 1)});
    CHECK(sigma_of(d.above, Slope(16, 1)) == ExtRat(rat(2)));
    CHECK(sigma_of(d.above, Slope(20, 1)) == ExtRat(rat(2)));
  }

  SUBCASE("beta = 17: t = 5/3 with two slopes below") {
    const auto d = dichotomy(model, mu, PeripheralClass(17, 1));
    CHECK(d.t == rat(5, 3));
    CHECK(slopes_of(d.below) == std::vector<Slope>{Slope(16, 1), Slope(37, 2)});
    CHECK(sigma_of(d.below, Slope(16, 1)) == ExtRat(rat(1)));
    CHECK(sigma_of(d.below, Slope(37, 2)) == ExtRat(rat(3, 2)));
    CHECK(slopes_of(d.above) == std::vector<Slope>{Slope(20, 1)});
  }

  SUBCASE("alpha on a boundary slope reports sigma = infinity") {
    const auto d = dichotomy(model, PeripheralClass(16, 1), PeripheralClass(19, 1));
    CHECK_FALSE(d.proportional);
    CHECK(sigma_of(d.above, Slope(16, 1)).is_infinite());
  }
}

TEST_CASE("dichotomy is slope-level and exhaustive") {
  auto gen = test_support::rng(0x5eed020);
  const NormModel model = pretzel_model(9);
  for (int i = 0; i < 200; ++i) {
    const PeripheralClass alpha = test_support::random_class(gen, 25);
    const PeripheralClass beta = test_support::random_class(gen, 25);
    if (alpha.slope() == beta.slope()) continue;
    const auto d = dichotomy(model, alpha, beta);
    CHECK(d.below.size() + d.at.size() + d.above.size() == model.ideal_slopes().size());
    // case 1 always has both witnesses
    CHECK_FALSE(d.proportional);
    CHECK(d.below.size() > 0);
    CHECK(d.above.size() > 0);

    // sigma agrees with the sublattice slope in the (alpha, beta) basis
    const SublatticeBasis basis(alpha.primitive(), beta.primitive());
    for (const auto& bucket : {d.below, d.at, d.above}) {
      for (const auto& entry : bucket) {
        CHECK(entry.sigma == sublattice_slope_abs(entry.slope, basis));
      }
    }
    // scaling either class never changes the report
    const auto scaled =
        dichotomy(model, PeripheralClass(3 * alpha.a(), 3 * alpha.b()),
                  PeripheralClass(-2 * beta.a(), -2 * beta.b()));
    CHECK(scaled.t == d.t);
    CHECK(slopes_of(scaled.below) == slopes_of(d.below));
    CHECK(slopes_of(scaled.above) == slopes_of(d.above));
  }
}

TEST_CASE("meridian-form sigma identity") {
  auto gen = test_support::rng(0x5eed021);
  const NormModel model = twist_model(2);
  const PeripheralClass mu = PeripheralClass::meridian();
  for (int i = 0; i < 200; ++i) {
    const PeripheralClass beta = test_support::random_class(gen, 25);
    if (beta.slope().is_infinite()) continue;
    const auto d = dichotomy(model, mu, beta);
    const Slope sb = beta.slope();
    for (const auto& bucket : {d.below, d.at, d.above}) {
      for (const auto& entry : bucket) {
        if (entry.slope.is_infinite()) continue;
        const Rat gap = abs(entry.slope.value() - sb.value());
        CHECK(entry.sigma == ExtRat(Rat(sb.b()) * gap));
      }
    }
  }
}

TEST_CASE("figure-eight proportionality") {
  const NormModel model = figure_eight_model();
  const auto d = dichotomy(model, PeripheralClass::meridian(), PeripheralClass::longitude());
  CHECK(d.proportional);
  CHECK(d.t == rat(4));
  REQUIRE(d.gamma.has_value());
  REQUIRE(d.delta.has_value());
  CHECK(*d.gamma == Slope(-4, 1));
  CHECK(*d.delta == Slope(4, 1));
}

TEST_CASE("figure-eight proportionality happens exactly on the hyperbola") {
  // alpha = a/b, beta = c/d are proportional precisely when 16bd = ac.
  const NormModel model = figure_eight_model();
  auto gen = test_support::rng(0x5eed022);
  int proportional_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const PeripheralClass alpha = test_support::random_class(gen, 20).primitive();
    const PeripheralClass beta = test_support::random_class(gen, 20).primitive();
    if (alpha.slope() == beta.slope()) continue;
    const auto d = dichotomy(model, alpha, beta);
    const bool hyperbola = 16 * alpha.b() * beta.b() == alpha.a() * beta.a();
    CHECK(d.proportional == hyperbola);
    proportional_seen += d.proportional ? 1 : 0;
  }
  // construct solutions of r_alpha * r_beta = 16 to hit the other direction
  auto gen2 = test_support::rng(0x5eed023);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const long a = num(gen2), b = den(gen2);
    if (a == 0 || std::abs(a) == 4 * b) continue;  // beta would be infinite or equal
    const PeripheralClass alpha = PeripheralClass(a, b).primitive();
    const PeripheralClass beta = PeripheralClass(16 * b, a).primitive();
    const auto d = dichotomy(model, alpha, beta);
    CHECK(d.proportional);
    ++proportional_seen;
  }
  CHECK(proportional_seen >= 100);
}

TEST_CASE("proportionality never occurs with three or more ideal slopes") {
  // sigma = t cuts two lines through the origin, so at most two distinct
  // slopes can satisfy it; on the three-slope family models case 2 is
  // therefore impossible.
  auto gen = test_support::rng(0x5eed024);
  for (const NormModel& model : bundled_models()) {
    if (model.ideal_slopes().size() < 3) continue;
    for (int i = 0; i < 100; ++i) {
      const PeripheralClass alpha = test_support::random_class(gen, 30);
      const PeripheralClass beta = test_support::random_class(gen, 30);
      if (alpha.slope() == beta.slope()) continue;
      CHECK_FALSE(dichotomy(model, alpha, beta).proportional);
    }
  }
}

TEST_CASE("theorem1 report on the worked examples") {
  SUBCASE("(-2,3,7), beta = 17") {
    const auto report =
        theorem1_report(pretzel_model(7), PeripheralClass::meridian(), PeripheralClass(17, 1));
    CHECK(report.case_number == 1);
    CHECK(report.t == rat(5, 3));
    CHECK(report.meridian_form);
    CHECK(*report.gap_bound == rat(5, 3));
    REQUIRE(report.gamma_side.size() == 2);
    CHECK(report.gamma_side[0].slope == Slope(16, 1));
    CHECK(*report.gamma_side[0].gap == rat(1));
    CHECK(report.gamma_side[1].slope == Slope(37, 2));
    CHECK(*report.gamma_side[1].gap == rat(3, 2));
    for (const auto& e : report.gamma_side) CHECK(*e.gap < *report.gap_bound);
    for (const auto& e : report.delta_side) CHECK(*e.gap > *report.gap_bound);
  }

  SUBCASE("(-2,3,9), beta = 22") {
    const auto report =
        theorem1_report(pretzel_model(9), PeripheralClass::meridian(), PeripheralClass(22, 1));
    CHECK(report.t == rat(5, 4));
    REQUIRE(report.gamma_side.size() == 1);
    CHECK(report.gamma_side[0].slope == Slope(67, 3));
    CHECK(*report.gamma_side[0].gap == rat(1, 3));
    CHECK(*report.gamma_side[0].gap < *report.gap_bound);
  }

  SUBCASE("figure-eight, beta = longitude") {
    const auto report = theorem1_report(figure_eight_model(), PeripheralClass::meridian(),
                                        PeripheralClass::longitude());
    CHECK(report.case_number == 2);
    CHECK(report.t == rat(4));
    CHECK(*report.gamma == Slope(-4, 1));
    CHECK(*report.delta == Slope(4, 1));
    CHECK(*report.gamma_gap == rat(4));
    CHECK(*report.delta_gap == rat(4));
    CHECK(*report.gap_bound == rat(4));
  }
}

TEST_CASE("cyclic gap check") {
  const NormModel model = pretzel_model(7);
  const PeripheralClass mu = PeripheralClass::meridian();

  SUBCASE("beta = 19") {
    const auto report = cyclic_gap_check(model, mu, PeripheralClass(19, 1), true);
    CHECK(report.t == rat(1));
    CHECK(slopes_of(report.gamma_side) == std::vector<Slope>{Slope(37, 2)});
    CHECK(slopes_of(report.delta_side) == std::vector<Slope>{Slope(16, 1)});
  }

  SUBCASE("beta = 18") {
    const auto report = cyclic_gap_check(model, mu, PeripheralClass(18, 1), true);
    CHECK(slopes_of(report.gamma_side) == std::vector<Slope>{Slope(37, 2)});
    CHECK(contains(slopes_of(report.delta_side), Slope(16, 1)));
    CHECK(contains(slopes_of(report.delta_side), Slope(20, 1)));
  }

  SUBCASE("non-cyclic classes are rejected") {
    CHECK_THROWS_AS(cyclic_gap_check(model, mu, PeripheralClass(17, 1), true), InputError);
    CHECK_THROWS_AS(cyclic_gap_check(model, PeripheralClass(16, 1), PeripheralClass(19, 1), true),
                    InputError);
  }
}

TEST_CASE("a proportional cyclic pair is a model inconsistency") {
  // A figure-eight-shaped norm with slopes 8 and 2 marked cyclic: the pair
  // (8, 2) satisfies 16bd = ac, so the pole orders are proportional.
  const NormModel model("inconsistent", true, true,
                        {{Slope(-4, 1), rat(2)}, {Slope(4, 1), rat(2)}}, {Slope(0, 1)},
                        {ExceptionalSlope::cyclic(Slope(8, 1)),
                         ExceptionalSlope::cyclic(Slope(2, 1))});
  CHECK_THROWS_WITH_AS(
      cyclic_gap_check(model, PeripheralClass(8, 1), PeripheralClass(2, 1), true),
      doctest::Contains("inconsistent"), ModelError);
  try {
    cyclic_gap_check(model, PeripheralClass(8, 1), PeripheralClass(2, 1), true);
  } catch (const ModelError& e) {
    CHECK(e.code() == "dunfield_violation");
  }

  // without the cohomology hypothesis the proportional case is reported as-is
  const auto report = cyclic_gap_check(model, PeripheralClass(8, 1), PeripheralClass(2, 1), false);
  CHECK(report.dichotomy.proportional);
}

TEST_CASE("finite-type gap bounds") {
  const Rat four = rat(4);
  CHECK(finite_gap_bound(FiniteType::C, four, false).t_bound == rat(1));
  CHECK(finite_gap_bound(FiniteType::D, four, false).t_bound == rat(2));
  CHECK(finite_gap_bound(FiniteType::T, four, false).t_bound == rat(2));
  CHECK(finite_gap_bound(FiniteType::O, four, false).t_bound == rat(5, 2));
  CHECK(finite_gap_bound(FiniteType::O, four, true).t_bound == rat(3));
  CHECK(finite_gap_bound(FiniteType::I, four, false).t_bound == rat(3));
  CHECK(finite_gap_bound(FiniteType::Q, four, false).t_bound == rat(2));

  CHECK(finite_gap_bound(FiniteType::I, four, false).norm_bound == rat(12));
  CHECK(finite_gap_bound(FiniteType::O, four, true).norm_bound == rat(16));
  CHECK(finite_gap_bound(FiniteType::I, four, false).q_set == std::vector<int>{1, 2, 3, 5});
  CHECK(finite_gap_bound(FiniteType::O, four, false).q_set == std::vector<int>{2, 4});

  // T tightens as the minimal norm grows; nothing ever exceeds 3
  CHECK(finite_gap_bound(FiniteType::T, rat(8), false).t_bound == rat(3, 2));
  for (const Rat& s_m : {rat(4), rat(9, 2), rat(8), rat(40)}) {
    for (FiniteType type : {FiniteType::C, FiniteType::D, FiniteType::T, FiniteType::O,
                            FiniteType::I, FiniteType::Q}) {
      for (bool torsion : {false, true}) {
        CHECK(finite_gap_bound(type, s_m, torsion).t_bound <= rat(3));
      }
    }
  }

  CHECK_THROWS_AS(finite_gap_bound(FiniteType::C, rat(3), false), ModelError);
  CHECK(finite_gap_bound(FiniteType::C, rat(3), false, true).t_bound == rat(1));
}

TEST_CASE("seifert gap values") {
  CHECK(seifert_gap(Int(6), rat(4)) == rat(4));          // figure-eight: A = 6, s0 = 4
  CHECK(seifert_gap(Int(0), rat(12)) == rat(1));
  CHECK(seifert_gap(Int(6), rat(24)) == rat(3, 2));      // pretzel n = 11, beta_1
  CHECK_THROWS_AS(seifert_gap(Int(-1), rat(4)), InputError);
}

TEST_CASE("diameter lower bounds") {
  const auto p7 = diam_lower_bound(pretzel_model(7));
  CHECK(p7.bound == rat(7, 3));
  CHECK(p7.witness == Slope(16, 1));

  const auto p9 = diam_lower_bound(pretzel_model(9));
  CHECK(p9.bound == rat(23, 4));
  CHECK(p9.witness == Slope(16, 1));

  for (long n : {-1L, -2L, -5L}) {
    const auto tw = diam_lower_bound(twist_model(n));
    CHECK(tw.bound == rat(-4 * n));
  }
}

TEST_CASE("the diameter strictly exceeds its bound on every bundled model") {
  for (const NormModel& model : bundled_models()) {
    CAPTURE(model.name());
    const Rat diam = model.diameter();
    CHECK(diam > diam_lower_bound(model).bound);
    CHECK(diam >= rat(2));
  }
}
