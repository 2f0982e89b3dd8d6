#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "csnorm/families.hpp"
#include "csnorm/theorems.hpp"

using namespace csnorm;

namespace {

std::vector<PeripheralClass> random_classes(std::size_t count) {
  std::mt19937_64 gen(0xBE9C4);
  std::uniform_int_distribution<long> coord(-500, 500);
  std::vector<PeripheralClass> out;
  while (out.size() < count) {
    const long a = coord(gen), b = coord(gen);
    if (a != 0 || b != 0) out.emplace_back(a, b);
  }
  return out;
}

void BM_NormEvaluation(benchmark::State& state) {
  const NormModel model = pretzel_model(7);
  const auto classes = random_classes(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rat value = model.norm(classes[i++ % classes.size()]);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_NormEvaluation);

void BM_MinNorm(benchmark::State& state) {
  const NormModel model = pretzel_model(state.range(0));
  for (auto _ : state) {
    const MinNorm value = model.min_norm();
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_MinNorm)->Arg(11)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_SolveWeights(benchmark::State& state) {
  const FamilySpec spec = twist_spec(state.range(0));
  for (auto _ : state) {
    const WeightSolution solution = solve_weights(spec.strict_slopes, spec.published_norms);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_SolveWeights)->Arg(2)->Arg(100);

void BM_Dichotomy(benchmark::State& state) {
  const NormModel model = pretzel_model(9);
  const PeripheralClass mu = PeripheralClass::meridian();
  const PeripheralClass beta(22, 1);
  for (auto _ : state) {
    const DichotomyResult result = dichotomy(model, mu, beta);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Dichotomy);

void BM_VerifyTwistParameter(benchmark::State& state) {
  for (auto _ : state) {
    const SweepRow row = verify_twist(state.range(0));
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_VerifyTwistParameter)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
