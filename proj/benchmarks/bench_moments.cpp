#include <benchmark/benchmark.h>

#include "vwapgamma/pricer.hpp"
#include "vwapgamma/vwap_moments.hpp"

using namespace vwapgamma;

namespace {

const MarketParams kMarket{100.0, 0.05, 0.2};

void BM_SumMomentsLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AveragingGrid grid{1.0, n};
  for (auto _ : state) benchmark::DoNotOptimize(gbm_sum_moments(kMarket, grid));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SumMomentsLinear)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_SumMomentsNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AveragingGrid grid{1.0, n};
  for (auto _ : state) benchmark::DoNotOptimize(gbm_sum_moments_naive(kMarket, grid));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SumMomentsNaive)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PriceVwap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double t = n / 252.0;
  const OptionSpec spec{100.0, t, OptionKind::put};
  for (auto _ : state) {
    benchmark::DoNotOptimize(price_vwap(kMarket, {10.0, 1.0, n}, {t, n}, spec, PricingVariant::exact));
  }
}
BENCHMARK(BM_PriceVwap)->Arg(5)->Arg(80);

void BM_ImpliedVol(benchmark::State& state) {
  const OptionSpec spec{105.0, 0.5, OptionKind::call};
  const double price = black_price(100.0, 0.23, spec, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(implied_vol_from_price(price, 100.0, spec, 0.02));
}
BENCHMARK(BM_ImpliedVol);

}  // namespace
