#include <benchmark/benchmark.h>

#include "berry/optimizer.hpp"

namespace {

berry::SweepConfig small_config() {
  auto cfg = berry::SweepConfig::theorem1();
  cfg.eps_min = 0.80;
  cfg.eps_max = 0.90;
  cfg.eps_steps = 4;
  cfg.n_max = 50;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = small_config();
  for (auto _ : state) benchmark::DoNotOptimize(berry::sweep_serial(cfg).max_ratio);
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = small_config();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(berry::sweep(cfg, threads).max_ratio);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
