#include <benchmark/benchmark.h>

#include "vwapgamma/mc_engine.hpp"
#include "vwapgamma/rng.hpp"

using namespace vwapgamma;

namespace {

void BM_StandardGamma(benchmark::State& state) {
  const double alpha = state.range(0) / 100.0;
  RngStream stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(stream.standard_gamma(alpha));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StandardGamma)->Arg(5)->Arg(50)->Arg(100)->Arg(1000);

void BM_StandardNormal(benchmark::State& state) {
  RngStream stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(stream.standard_normal());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StandardNormal);

// Paths per second for the joint VWAP / Asian estimator on a single worker.
void BM_McPaths(benchmark::State& state) {
  const MarketParams market{100.0, 0.05, 0.2};
  const AveragingGrid grid{2.0 / 52.0, static_cast<int>(state.range(0))};
  const OptionSpec spec{100.0, grid.maturity, OptionKind::call};
  McConfig config;
  config.n_paths = 100'000;
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_simulate(market, {0.5, 0.00067, grid.n_buckets}, grid, spec, config));
  }
  state.SetItemsProcessed(state.iterations() * config.n_paths);
}
BENCHMARK(BM_McPaths)->Arg(10)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace
