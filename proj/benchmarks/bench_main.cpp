#include <benchmark/benchmark.h>

#include <random>

#include "thermocat/thermocat.hpp"

namespace {

using namespace thermocat;

ProbDist draw(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (double& x : w) s += (x = ex(rng) + 1e-3);
  for (double& x : w) x /= s;
  return ProbDist::make(w);
}

void BM_RenyiDivergence(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProbDist p = draw(rng, n);
  const ProbDist q = draw(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(renyi_divergence(p, q, Alpha::finite(2.5)));
}
BENCHMARK(BM_RenyiDivergence)->Arg(4)->Arg(64)->Arg(1024);

void BM_TsallisDivergence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProbDist p = draw(rng, n);
  const ProbDist q = draw(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(tsallis_divergence(p, q, Alpha::finite(0.7)));
}
BENCHMARK(BM_TsallisDivergence)->Arg(4)->Arg(64)->Arg(1024);

void BM_SecondLawScan(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = 0.1 * static_cast<double>(i);
  const GibbsContext ctx(e, 1.0);
  const ProbDist p = draw(rng, n);
  const ProbDist pp = draw(rng, n);
  const auto grid = default_alpha_grid();
  for (auto _ : state) benchmark::DoNotOptimize(second_law_scan(p, pp, ctx, grid));
}
BENCHMARK(BM_SecondLawScan)->Arg(2)->Arg(16)->Arg(256);

void BM_ThermoCurve(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProbDist p = draw(rng, n);
  const ProbDist g = draw(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(thermo_curve(p, g));
}
BENCHMARK(BM_ThermoCurve)->Arg(4)->Arg(64)->Arg(1024);

void BM_CorrelatedScenario(benchmark::State& state) {
  const ScenarioParams params;
  for (auto _ : state) benchmark::DoNotOptimize(scenario_report(params, {0.05, 0.065}, {0.0947}));
}
BENCHMARK(BM_CorrelatedScenario);

}  // namespace

BENCHMARK_MAIN();
