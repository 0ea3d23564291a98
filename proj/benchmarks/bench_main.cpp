#include <benchmark/benchmark.h>

#include "schlicht/classify.hpp"
#include "schlicht/harness.hpp"
#include "schlicht/operators.hpp"
#include "schlicht/random.hpp"

using namespace schlicht;

namespace {

Series random_series(std::uint64_t seed, int order) {
  Rng rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return Series(std::move(c));
}

void BM_CauchyProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series a = random_series(1, n);
  const Series b = random_series(2, n);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Reciprocal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Series a = random_series(3, n);
  a = a + Series::constant(4.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(a));
}
BENCHMARK(BM_Reciprocal)->RangeMultiplier(4)->Range(16, 1024);

void BM_EvaluateOnCircle(benchmark::State& state) {
  const Series a = random_series(4, 256);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_on_circle(a, 0.9, m));
}
BENCHMARK(BM_EvaluateOnCircle)->Arg(256)->Arg(255)->Arg(1024);

void BM_Quadrature(benchmark::State& state) {
  const AnalyticFunction k = AnalyticFunction::koebe(0.0);
  const OperatorSpec op = state.range(0) == 0 ? OperatorSpec::bernardi(0.5) : OperatorSpec::jks(0.5);
  const Complex z = std::polar(0.8, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_quadrature(op, k, z));
}
BENCHMARK(BM_Quadrature)->Arg(0)->Arg(1);

void BM_SampleOnGrid(benchmark::State& state) {
  const DiskGrid grid = DiskGrid::default_grid();
  const AnalyticFunction f = state.range(0) == 0
                                 ? AnalyticFunction::koebe(0.25)
                                 : AnalyticFunction::applied(OperatorSpec::bernardi(1.0), AnalyticFunction::koebe(0.25));
  for (auto _ : state) benchmark::DoNotOptimize(sample_on_grid(f, grid));
}
BENCHMARK(BM_SampleOnGrid)->Arg(0)->Arg(1);

void BM_Certify(benchmark::State& state) {
  const DiskGrid grid = DiskGrid::default_grid();
  const AnalyticFunction f = generate_perturbed(5, 16, 0.3);
  const ClassSpec spec = ClassSpec::strongly_starlike(0.5, 0.0).lifted(OperatorSpec::jks(1.5));
  for (auto _ : state) benchmark::DoNotOptimize(certify(f, spec, grid));
}
BENCHMARK(BM_Certify);

void BM_RunTheorem(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.theorem = TheoremId::T2_7;
  cfg.sample_count = 2;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem(cfg));
}
BENCHMARK(BM_RunTheorem)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
