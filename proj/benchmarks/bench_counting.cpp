#include <benchmark/benchmark.h>

#include "minperm/counting.hpp"
#include "minperm/tableau.hpp"

using namespace minperm;

static void BM_CountMinimal(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_minimal(n / 2 + 1, n));
}
BENCHMARK(BM_CountMinimal)->DenseRange(10, 22, 4);

static void BM_AitkenStaircase(benchmark::State& state) {
  // (k+1, k, ..., 2) / (k-1, ..., 1): a skew staircase with two cells per row.
  const int k = static_cast<int>(state.range(0));
  std::vector<int> outer, inner;
  for (int r = 0; r < k; ++r) {
    outer.push_back(k + 1 - r);
    if (r + 1 < k) inner.push_back(k - 1 - r);
  }
  const SkewShape shape{Partition(outer), Partition(inner)};
  for (auto _ : state) benchmark::DoNotOptimize(aitken_count(shape));
}
BENCHMARK(BM_AitkenStaircase)->RangeMultiplier(2)->Range(4, 32);

static void BM_HookCount(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Partition square(std::vector<int>(static_cast<std::size_t>(k), k));
  for (auto _ : state) benchmark::DoNotOptimize(hook_count(square));
}
BENCHMARK(BM_HookCount)->RangeMultiplier(2)->Range(4, 32);

static void BM_BacktrackingSkew(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const SkewShape shape(Partition({k, k, k}), Partition({1}));
  for (auto _ : state) benchmark::DoNotOptimize(count_skew_syt(shape));
}
BENCHMARK(BM_BacktrackingSkew)->DenseRange(3, 6);
