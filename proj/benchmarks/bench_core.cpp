#include "mmkde/mmkde.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace mmkde;

namespace {

Sample draws(std::size_t n, std::uint64_t seed = 1)
{
  Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v)
    x = rng.gamma(2.0, 0.5);
  return Sample(std::move(v));
}

void BM_LogGammaComplex(benchmark::State& state)
{
  Complex z(0.3, -7.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 1e-9);
  }
}
BENCHMARK(BM_LogGammaComplex);

void BM_KernelDensity(benchmark::State& state)
{
  MeijerKernel k{1.1, 0.3, {1.0, std::numbers::pi / 4}};
  double x = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_density(k, x));
    x += 1e-12;
  }
}
BENCHMARK(BM_KernelDensity);

void BM_EvaluateGrid(benchmark::State& state)
{
  Sample s = draws(static_cast<std::size_t>(state.range(0)));
  MMEstimator m = fit(s, {1.0, std::numbers::pi / 4}, 0.4);
  std::vector<double> xs = linear_grid(0.01, 15.0, 1000);
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_grid(m, xs, static_cast<unsigned>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}
BENCHMARK(BM_EvaluateGrid)->Args({100, 1})->Args({500, 1})->Args({500, 4})->UseRealTime();

void BM_IHat(benchmark::State& state)
{
  Sample s = draws(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(i_hat(s, 1.5, 3.0));
}
BENCHMARK(BM_IHat)->Arg(100)->Arg(500);

void BM_PluginEta(benchmark::State& state)
{
  Sample s = draws(static_cast<std::size_t>(state.range(0)));
  SelectorConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(plugin_eta(s, cfg));
}
BENCHMARK(BM_PluginEta)->Arg(100)->Arg(500);

void BM_Mise(benchmark::State& state)
{
  BenchOptions opt;
  opt.n = 100;
  opt.M = 4;
  EstimatorSpec spec = parse_estimator("mm:1:pi/4:c1.5");
  for (auto _ : state)
    benchmark::DoNotOptimize(mise(4, spec, opt).mise);
}
BENCHMARK(BM_Mise)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
