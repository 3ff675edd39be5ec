#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "minperm/permutation.hpp"

namespace minperm {

inline constexpr std::size_t kDefaultBruteForceCap = 11;

/// Size cap and parallelism for exhaustive scans of S_n.
struct BruteForceLimits {
  std::size_t max_n = kDefaultBruteForceCap;
  unsigned threads = 0;  // 0 picks std::thread::hardware_concurrency()

  /// Defaults, with max_n overridden by MINPERM_MAX_BRUTE_N when set.
  static BruteForceLimits from_environment();
};

/// Throws CapExceeded when n exceeds `cap`.
void require_within_cap(std::size_t n, std::size_t cap, std::string_view what);

/// Optional restrictions applied on top of minimality.
struct MinimalFilter {
  std::optional<std::size_t> descents;
  std::optional<AscentSequence> ascents;
  /// 1-based p: descents at p and p+1 form the only pair of consecutive
  /// descents.
  std::optional<std::size_t> consecutive_descents_at;

  bool matches(std::span<const int> word) const;
};

/// Scans S_n in lexicographic order split into n blocks by first value.
/// Each block accumulates into its own `Acc` through visit(acc, word);
/// blocks are returned in order, so merging them left to right is
/// deterministic regardless of thread count.
template <class Acc, class Visit>
std::vector<Acc> scan_permutation_blocks(std::size_t n, unsigned threads, Visit visit) {
  std::vector<Acc> blocks(n);
  if (n == 0) return blocks;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<int> word(n);
    for (std::size_t b = next++; b < n; b = next++) {
      word[0] = static_cast<int>(b) + 1;
      std::size_t t = 1;
      for (int v = 1; v <= static_cast<int>(n); ++v) {
        if (v != word[0]) word[t++] = v;
      }
      do {
        visit(blocks[b], std::span<const int>(word));
      } while (std::next_permutation(word.begin() + 1, word.end()));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return blocks;
}

/// Every minimal permutation of length n that passes `filter`, in
/// lexicographic order. Refuses n above limits.max_n.
std::vector<Permutation> enumerate_minimal(std::size_t n, const MinimalFilter& filter = {},
                                           const BruteForceLimits& limits = {});

/// Brute-force f_d(n) for every d in 0..n-1 (index d). With
/// `deletion_oracle` the definitional test replaces the structural one.
std::vector<std::uint64_t> brute_counts_by_descents(std::size_t n, const BruteForceLimits& limits,
                                                    bool deletion_oracle = false);

}  // namespace minperm
