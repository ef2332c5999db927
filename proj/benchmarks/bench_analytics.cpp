#include <benchmark/benchmark.h>

#include <vector>

#include "vwapgamma/rng.hpp"
#include "vwapgamma/volume_analytics.hpp"

using namespace vwapgamma;

namespace {

std::vector<double> sample(int n) {
  RngStream stream(3, 0);
  std::vector<double> x(n);
  for (double& v : x) v = sample_gamma(stream, 1.3, 2.0e5);
  return x;
}

void BM_FitGamma(benchmark::State& state) {
  const std::vector<double> x = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_gamma_mle(x));
}
BENCHMARK(BM_FitGamma)->Arg(128)->Arg(1026)->Arg(5130);

void BM_GofStatistics(benchmark::State& state) {
  const std::vector<double> x = sample(static_cast<int>(state.range(0)));
  const GammaFit fit = fit_gamma_mle(x);
  for (auto _ : state) benchmark::DoNotOptimize(gof_statistics(x, fit.alpha_hat, fit.theta_hat));
}
BENCHMARK(BM_GofStatistics)->Arg(128)->Arg(1026);

void BM_Bootstrap(benchmark::State& state) {
  const std::vector<double> x = sample(static_cast<int>(state.range(0)));
  const GammaFit fit = fit_gamma_mle(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gof_pvalues(x, fit.alpha_hat, fit.theta_hat, 200, 1, 1));
  }
}
BENCHMARK(BM_Bootstrap)->Arg(128)->Arg(1026)->Unit(benchmark::kMillisecond);

}  // namespace
