// Acceptance suite: every criterion below is exact (tolerance zero) and
// prints one PASS/FAIL line. The first argument must be the path to the
// csnorm CLI binary; criteria 1, 2 and 5 drive it as a subprocess.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "csnorm/errors.hpp"
#include "csnorm/families.hpp"
#include "csnorm/model_io.hpp"
#include "csnorm/norm_model.hpp"
#include "csnorm/theorems.hpp"

using namespace csnorm;

namespace {

std::string g_cli;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

Rat rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "cannot spawn: " + command);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

void check_table(const std::string& model, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& expected) {
  const CliResult csv = run_cli("table " + model + " --format csv");
  require(csv.exit_code == 0, "table exited with " + std::to_string(csv.exit_code));
  const auto rows = parse_csv(csv.output);
  require(rows.size() == expected.size() + 1, "unexpected row count");
  require(rows[0] == header, "unexpected header: " + csv.output);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    require(rows[i + 1] == expected[i], "table row " + std::to_string(i) + " mismatch");
  }

  // The aligned text rendering carries the same values cell for cell.
  const CliResult text = run_cli("table " + model);
  require(text.exit_code == 0, "text table failed");
  const auto lines = [&] {
    std::vector<std::string> out;
    std::istringstream in(text.output);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) out.push_back(line);
    }
    return out;
  }();
  require(lines.size() == expected.size() + 2, "unexpected text line count");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    require(whitespace_tokens(lines[i + 2]) == expected[i],
            "text row " + std::to_string(i) + " differs from csv");
  }
}

// 1. Table reproduction for the (-2,3,7) pretzel knot: the published layout
// with rows 16, 20, 37/2 and columns f_mu, f_17, f_18, f_19.
void criterion_table_237() {
  check_table("pretzel:-2,3,7", {"boundary_slope", "f_1/0", "f_17", "f_18", "f_19"},
              {{"16", "2", "2", "4", "6"},
               {"20", "2", "6", "4", "2"},
               {"37/2", "8", "12", "4", "4"}});
}

// 2. Table reproduction for the (-2,3,9) pretzel knot: rows 16, 24, 67/3.
void criterion_table_239() {
  check_table("pretzel:-2,3,9", {"boundary_slope", "f_1/0", "f_22", "f_23"},
              {{"16", "2", "12", "14"},
               {"24", "2", "4", "2"},
               {"67/3", "12", "4", "8"}});
}

// 3. Norm spot values for both tabulated pretzels.
void criterion_norm_values() {
  const NormModel p7 = pretzel_model(7);
  require(p7.norm(PeripheralClass::meridian()) == rat(12), "|mu| != 12");
  require(p7.norm(PeripheralClass(17, 1)) == rat(20), "|17| != 20");
  require(p7.norm(PeripheralClass(18, 1)) == rat(12), "|18| != 12");
  require(p7.norm(PeripheralClass(19, 1)) == rat(12), "|19| != 12");
  require(p7.norm(PeripheralClass(16, 1)) == rat(28), "|16| != 28");

  const NormModel p9 = pretzel_model(9);
  require(p9.norm(PeripheralClass::meridian()) == rat(16), "|mu| != 16");
  require(p9.norm(PeripheralClass(22, 1)) == rat(20), "|22| != 20");
  require(p9.norm(PeripheralClass(23, 1)) == rat(24), "|23| != 24");
  require(p9.norm(PeripheralClass(16, 1)) == rat(92), "|16| != 92");
}

bool side_is(const std::vector<SlopeSigma>& side, const std::vector<Slope>& slopes) {
  if (side.size() != slopes.size()) return false;
  for (const auto& slope : slopes) {
    if (std::none_of(side.begin(), side.end(),
                     [&](const SlopeSigma& e) { return e.slope == slope; })) {
      return false;
    }
  }
  return true;
}

// 4. Dichotomy witnesses for beta = 19, 18, 17 on the (-2,3,7) model.
void criterion_dichotomy_witnesses() {
  const NormModel model = pretzel_model(7);
  const PeripheralClass mu = PeripheralClass::meridian();

  const auto d19 = dichotomy(model, mu, PeripheralClass(19, 1));
  require(!d19.proportional, "beta=19 must be case 1");
  require(side_is(d19.above, {Slope(16, 1)}), "beta=19 x-side must be {16}");
  require(side_is(d19.below, {Slope(37, 2)}), "beta=19 y-side must be {37/2}");

  const auto d18 = dichotomy(model, mu, PeripheralClass(18, 1));
  require(side_is(d18.above, {Slope(16, 1), Slope(20, 1)}), "beta=18 above must be {16, 20}");
  require(side_is(d18.below, {Slope(37, 2)}), "beta=18 below must be {37/2}");

  const auto d17 = dichotomy(model, mu, PeripheralClass(17, 1));
  require(d17.t == rat(5, 3), "beta=17 must have t = 5/3");
  require(side_is(d17.below, {Slope(37, 2), Slope(16, 1)}), "beta=17 below must be {37/2, 16}");
}

// 5. Figure-eight proportional case, via the CLI and as a two-way property.
void criterion_figure_eight() {
  const CliResult cli = run_cli("dichotomy figure8 --alpha 1/0 --beta 0/1");
  require(cli.exit_code == 0, "dichotomy exited with " + std::to_string(cli.exit_code));
  require(cli.output.find("Case 2, t = 4, slopes {-4, 4}") != std::string::npos,
          "unexpected CLI output: " + cli.output);

  const NormModel model = figure_eight_model();
  std::mt19937_64 gen(0xACC0005);
  std::uniform_int_distribution<long> coord(-20, 20);
  int tested = 0;
  while (tested < 120) {
    const long a = coord(gen), b = coord(gen), c = coord(gen), d = coord(gen);
    if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
    const PeripheralClass alpha = PeripheralClass(a, b).primitive();
    const PeripheralClass beta = PeripheralClass(c, d).primitive();
    if (alpha.slope() == beta.slope()) continue;
    ++tested;
    const bool hyperbola = 16 * alpha.b() * beta.b() == alpha.a() * beta.a();
    const auto result = dichotomy(model, alpha, beta);
    require(result.proportional == hyperbola, "case 2 <=> 16bd = ac failed");
  }
  // the converse direction, on constructed solutions of r_alpha * r_beta = 16
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  int constructed = 0;
  while (constructed < 60) {
    const long a = num(gen), b = den(gen);
    if (a == 0 || std::labs(a) == 4 * b) continue;
    ++constructed;
    const auto result = dichotomy(model, PeripheralClass(a, b).primitive(),
                                  PeripheralClass(16 * b, a).primitive());
    require(result.proportional, "constructed hyperbola pair was not proportional");
  }
}

// 6. Diameters against their lower bounds.
void criterion_diameters() {
  require(pretzel_model(7).diameter() == rat(4), "diam(-2,3,7) != 4");
  require(diam_lower_bound(pretzel_model(7)).bound == rat(7, 3), "bound(-2,3,7) != 7/3");
  require(pretzel_model(9).diameter() == rat(8), "diam(-2,3,9) != 8");
  require(diam_lower_bound(pretzel_model(9)).bound == rat(23, 4), "bound(-2,3,9) != 23/4");

  for (long n : {2L, 3L, 5L, 10L, 100L}) {
    const NormModel model = twist_model(n);
    require(model.diameter() == rat(4 * n + 2), "twist diam != 4n+2");
    require(diam_lower_bound(model).bound == make_rat(Int(8 * n * (n - 1)), Int(2 * n - 1)),
            "twist bound != 8n(n-1)/(2n-1)");
  }
  require(twist_model(2).diameter() - diam_lower_bound(twist_model(2)).bound == rat(14, 3),
          "twist n=2 difference != 14/3");

  for (long n : {-1L, -2L, -7L, -50L}) {
    const NormModel model = twist_model(n);
    require(model.diameter() == rat(4 - 4 * n), "twist diam != 4-4n");
    require(diam_lower_bound(model).bound == rat(-4 * n), "twist bound != -4n");
  }

  for (const NormModel& model : bundled_models()) {
    require(model.diameter() > diam_lower_bound(model).bound,
            model.name() + ": diameter does not exceed the bound");
  }

  const CliResult cli = run_cli("diam pretzel:-2,3,9");
  require(cli.exit_code == 0, "diam exited with " + std::to_string(cli.exit_code));
  require(cli.output.find("diam = 8, bound = 23/4") != std::string::npos,
          "unexpected diam output: " + cli.output);
  require(cli.output.find("OK") != std::string::npos, "diam did not report OK");
}

// 7. Full family sweeps with exact formula round-trips.
void criterion_sweeps() {
  const SweepReport p_pos = sweep_pretzel(11, 199);
  require(p_pos.rows.size() == 95, "pretzel sweep should cover 95 parameters");
  require(p_pos.pass(), "pretzel 11..199 sweep failed");
  require(p_pos.rows.front().difference == rat(13, 6), "difference at n=11 != 13/6");

  const SweepReport p_neg = sweep_pretzel(-199, -5);
  require(p_neg.rows.size() == 98, "negative pretzel sweep should cover 98 parameters");
  require(p_neg.pass(), "pretzel -199..-5 sweep failed");

  const SweepReport t_pos = sweep_twist(2, 100);
  require(t_pos.rows.size() == 99, "twist sweep should cover 99 parameters");
  require(t_pos.pass(), "twist 2..100 sweep failed");
  require(t_pos.rows.front().difference == rat(14, 3), "difference at n=2 != 14/3");

  const SweepReport t_neg = sweep_twist(-100, -1);
  require(t_neg.rows.size() == 100, "negative twist sweep should cover 100 parameters");
  require(t_neg.pass(), "twist -100..-1 sweep failed");
}

// 8. The finite-type bound table.
void criterion_finite_bounds() {
  const Rat four = rat(4);
  require(finite_gap_bound(FiniteType::C, four, false).t_bound == rat(1), "C bound != 1");
  require(finite_gap_bound(FiniteType::D, four, false).t_bound == rat(2), "D bound != 2");
  require(finite_gap_bound(FiniteType::T, four, false).t_bound == rat(2), "T bound != 2");
  require(finite_gap_bound(FiniteType::O, four, false).t_bound == rat(5, 2),
          "O bound != 5/2 without even torsion");
  require(finite_gap_bound(FiniteType::O, four, true).t_bound == rat(3),
          "O bound != 3 with even torsion");
  require(finite_gap_bound(FiniteType::I, four, false).t_bound == rat(3), "I bound != 3");
  require(finite_gap_bound(FiniteType::Q, four, false).t_bound == rat(2), "Q bound != 2");

  for (const Rat& s_m : {rat(4), rat(9, 2), rat(6), rat(8), rat(12), rat(100)}) {
    for (FiniteType type : {FiniteType::C, FiniteType::D, FiniteType::T, FiniteType::O,
                            FiniteType::I, FiniteType::Q}) {
      for (bool torsion : {false, true}) {
        require(finite_gap_bound(type, s_m, torsion).t_bound <= rat(3), "a bound exceeds 3");
      }
    }
  }
}

// 9. Property suites: homogeneity, subadditivity, pole-order partition,
// intersection-number invariance, minimal norms, and i/o round-trips.
void criterion_properties() {
  std::mt19937_64 gen(0xACC0009);
  std::uniform_int_distribution<long> coord(-60, 60);
  std::uniform_int_distribution<long> scale(-4, 4);

  auto random_class = [&]() {
    for (;;) {
      const long a = coord(gen), b = coord(gen);
      if (a != 0 || b != 0) return PeripheralClass(a, b);
    }
  };

  const std::vector<std::pair<std::string, Rat>> minimal = {
      {"pretzel:-2,3,7", rat(12)}, {"pretzel:-2,3,9", rat(16)}, {"pretzel:-2,3,11", rat(24)},
      {"pretzel:-2,3,15", rat(34)}, {"pretzel:-2,3,-5", rat(18)}, {"pretzel:-2,3,-9", rat(28)},
      {"twist:2", rat(6)}, {"twist:3", rat(10)}, {"twist:-2", rat(8)}, {"twist:-1", rat(4)}};

  for (const NormModel& model : bundled_models()) {
    for (int i = 0; i < 1000; ++i) {
      const PeripheralClass gamma = random_class();
      const Rat n = model.norm(gamma);
      require(n > 0, model.name() + ": norm not positive");

      long k = scale(gen);
      if (k == 0) k = 1;
      require(model.norm(PeripheralClass(k * gamma.a(), k * gamma.b())) == abs(Rat(k)) * n,
              model.name() + ": homogeneity failed");

      const PeripheralClass other = random_class();
      if (gamma.a() + other.a() != 0 || gamma.b() + other.b() != 0) {
        require(model.norm(PeripheralClass(gamma.a() + other.a(), gamma.b() + other.b())) <=
                    n + model.norm(other),
                model.name() + ": triangle inequality failed");
      }

      Rat total = 0;
      for (const auto& datum : model.ideal_slopes()) total += model.pole_order(datum, gamma);
      require(total == n, model.name() + ": pole orders do not sum to the norm");
    }

    const MinNorm mn = model.min_norm();
    const auto expected = std::find_if(minimal.begin(), minimal.end(), [&](const auto& entry) {
      return entry.first == model.name();
    });
    require(expected != minimal.end(), "no expected minimal norm for " + model.name());
    require(mn.value == expected->second, model.name() + ": minimal norm mismatch");

    std::istringstream in(save_model_text(model));
    require(load_model(in, "<roundtrip>") == model, model.name() + ": i/o round-trip failed");
  }

  // delta is invariant under every determinant +-1 change of basis
  std::uniform_int_distribution<int> shear(-3, 3);
  std::uniform_int_distribution<int> steps(1, 6);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < 1000; ++i) {
    std::array<long, 4> m{1, 0, 0, 1};
    const int rounds = steps(gen);
    for (int r = 0; r < rounds; ++r) {
      const long k = shear(gen);
      if (coin(gen) % 2 == 0) {
        m[1] += m[0] * k;
        m[3] += m[2] * k;
      } else {
        m[0] += m[1] * k;
        m[2] += m[3] * k;
      }
    }
    if (coin(gen) == 0) {
      std::swap(m[0], m[1]);
      std::swap(m[2], m[3]);
    }
    const Slope s = random_class().slope();
    const Slope t = random_class().slope();
    const Slope us(m[0] * s.a() + m[1] * s.b(), m[2] * s.a() + m[3] * s.b());
    const Slope ut(m[0] * t.a() + m[1] * t.b(), m[2] * t.a() + m[3] * t.b());
    require(delta(us, ut) == delta(s, t), "delta is not invariant");
  }
}

struct Criterion {
  int id;
  std::string label;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: csnorm_acceptance <path-to-csnorm-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "table pretzel:-2,3,7 reproduces the published pole-order matrix",
       criterion_table_237},
      {2, "table pretzel:-2,3,9 reproduces the published pole-order matrix",
       criterion_table_239},
      {3, "norm spot values for (-2,3,7) and (-2,3,9)", criterion_norm_values},
      {4, "dichotomy witnesses for beta = 19, 18, 17", criterion_dichotomy_witnesses},
      {5, "figure-eight case 2 and the 16bd = ac equivalence", criterion_figure_eight},
      {6, "diameters strictly exceed their lower bounds", criterion_diameters},
      {7, "family sweeps verify every published formula", criterion_sweeps},
      {8, "finite-type bound table (C,D,T,O,I,Q)", criterion_finite_bounds},
      {9, "property suites: norms, invariance, minimality, i/o", criterion_properties},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    try {
      criterion.run();
      std::printf("PASS  %d  %s\n", criterion.id, criterion.label.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %d  %s: %s\n", criterion.id, criterion.label.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
