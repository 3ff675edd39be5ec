#include <benchmark/benchmark.h>

#include "minperm/enumerate.hpp"

using namespace minperm;

static void BM_BruteCounts(benchmark::State& state) {
  BruteForceLimits limits;
  limits.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_counts_by_descents(static_cast<std::size_t>(state.range(0)), limits));
  }
}
BENCHMARK(BM_BruteCounts)->Args({8, 1})->Args({9, 1})->Args({9, 0})->Unit(benchmark::kMillisecond);

static void BM_IsMinimal(benchmark::State& state) {
  const Permutation p = parse_permutation("16 13 4 1 7 3 14 12 9 5 2 11 10 6 15 8");
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal(p));
}
BENCHMARK(BM_IsMinimal);
