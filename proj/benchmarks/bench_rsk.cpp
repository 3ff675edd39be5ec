#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "minperm/rsk.hpp"

using namespace minperm;

static void BM_Rsk(benchmark::State& state) {
  std::vector<int> w(static_cast<std::size_t>(state.range(0)));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), std::mt19937(7));
  for (auto _ : state) benchmark::DoNotOptimize(rsk(w));
}
BENCHMARK(BM_Rsk)->RangeMultiplier(4)->Range(16, 1024);

static void BM_KnuthChain(benchmark::State& state) {
  const Permutation p = parse_permutation("6 3 7 4 1 5 2 9 8 11 10 13 12");
  for (auto _ : state) benchmark::DoNotOptimize(knuth_chain(p));
}
BENCHMARK(BM_KnuthChain);
