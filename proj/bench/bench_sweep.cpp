// Serial reference sweep vs the OpenMP sweep, plus the per-trial kernels.
#include <benchmark/benchmark.h>

#include "fifogap/experiment.hpp"
#include "fifogap/packing.hpp"

namespace {

fifogap::ExperimentConfig bench_config() {
  auto cfg = fifogap::reference_config(fifogap::Pareto{0.5}, 42);
  cfg.trials_per_size = 10;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(fifogap::run_sweep_serial(cfg));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = bench_config();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fifogap::run_sweep(cfg, threads));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GreedyPack(benchmark::State& state) {
  const auto cfg = bench_config();
  fifogap::RandomStream rng(1);
  const auto q = fifogap::sample(cfg.distribution, static_cast<std::size_t>(state.range(0)), rng);
  const auto a = fifogap::sample_gas(1, 3, q.size(), rng);
  const fifogap::ProblemInstance inst(q, a, {200.0, 0.0, 1.0, 3.0});
  for (auto _ : state) benchmark::DoNotOptimize(fifogap::greedy_pack(inst));
}
BENCHMARK(BM_GreedyPack)->Arg(1000)->Arg(10000);

void BM_ExactPack(benchmark::State& state) {
  fifogap::RandomStream rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = fifogap::sample(fifogap::Exponential{2.5}, n, rng);
  const auto a = fifogap::sample_gas(1, 3, n, rng);
  const fifogap::ProblemInstance inst(q, a, {static_cast<double>(n), 0.0, 1.0, 3.0});
  for (auto _ : state) benchmark::DoNotOptimize(fifogap::exact_pack(inst, 64));
}
BENCHMARK(BM_ExactPack)->Arg(18)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
