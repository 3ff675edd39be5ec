#include "minperm/enumerate.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "minperm/error.hpp"

namespace minperm {

BruteForceLimits BruteForceLimits::from_environment() {
  BruteForceLimits limits;
  if (const char* env = std::getenv("MINPERM_MAX_BRUTE_N"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end) {
      throw InvalidInput(std::string("MINPERM_MAX_BRUTE_N is not a number: ") + env);
    }
    limits.max_n = value;
  }
  return limits;
}

void require_within_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds the brute-force cap of " + std::to_string(cap) +
                      " (raise it with --max-brute-n or MINPERM_MAX_BRUTE_N)");
  }
}

bool MinimalFilter::matches(std::span<const int> word) const {
  if (descents && descent_count(word) != *descents) return false;
  if (ascents && !(maximal_decreasing_runs(word) == *ascents)) return false;
  if (consecutive_descents_at) {
    const std::size_t p = *consecutive_descents_at;
    std::size_t found = 0;
    bool at_p = false;
    for (std::size_t i = 0; i + 2 < word.size(); ++i) {
      if (word[i] > word[i + 1] && word[i + 1] > word[i + 2]) {
        ++found;
        at_p = at_p || i + 1 == p;
      }
    }
    if (found != 1 || !at_p) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_minimal(std::size_t n, const MinimalFilter& filter,
                                           const BruteForceLimits& limits) {
  if (n == 0) throw InvalidInput("n must be at least 1");
  require_within_cap(n, limits.max_n, "enumerate_minimal");
  auto blocks = scan_permutation_blocks<std::vector<Permutation>>(
      n, limits.threads, [&](std::vector<Permutation>& acc, std::span<const int> w) {
        if (is_minimal(w) && filter.matches(w)) {
          acc.emplace_back(std::vector<int>(w.begin(), w.end()));
        }
      });
  std::vector<Permutation> out;
  for (auto& block : blocks) {
    for (auto& p : block) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::uint64_t> brute_counts_by_descents(std::size_t n, const BruteForceLimits& limits,
                                                    bool deletion_oracle) {
  if (n == 0) throw InvalidInput("n must be at least 1");
  require_within_cap(n, limits.max_n, "brute_counts_by_descents");
  auto blocks = scan_permutation_blocks<std::vector<std::uint64_t>>(
      n, limits.threads, [&](std::vector<std::uint64_t>& acc, std::span<const int> w) {
        if (acc.empty()) acc.assign(n, 0);
        const bool minimal = deletion_oracle ? is_minimal_by_deletion(w) : is_minimal(w);
        if (minimal) ++acc[descent_count(w)];
      });
  std::vector<std::uint64_t> total(n, 0);
  for (const auto& block : blocks) {
    for (std::size_t d = 0; d < block.size(); ++d) total[d] += block[d];
  }
  return total;
}

}  // namespace minperm
