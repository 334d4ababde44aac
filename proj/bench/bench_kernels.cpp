// Serial reference vs OpenMP kernel. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "leray/kernels.hpp"

namespace {

leray::SoundnessDomain domain_for(const benchmark::State& state) {
  return leray::SoundnessDomain{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 6, 3};
}

void BM_SoundnessReference(benchmark::State& state) {
  const auto dom = domain_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(leray::exhaustive_soundness_reference(dom));
}

void BM_SoundnessParallel(benchmark::State& state) {
  const auto dom = domain_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(leray::exhaustive_soundness(dom));
}

void BM_SweepReference(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leray::sweep_reference(m, m));
}

void BM_SweepParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leray::sweep(m, m));
}

}  // namespace

BENCHMARK(BM_SoundnessReference)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessParallel)->Args({3, 3})->Args({4, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepReference)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
