#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minperm/enumerate.hpp"
#include "minperm/tableau.hpp"

namespace minperm {

enum class Suite { All, Counts, Bijection, Rsk };

Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct VerifyOptions {
  std::size_t max_n = 9;
  Suite suite = Suite::All;
  /// Test-only: perturbs one entry of every ascent matrix so the count
  /// checks must fail. Exercises the harness itself.
  bool inject_fault = false;
  BruteForceLimits limits = {};
  std::uint64_t seed = 20240517;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  nlohmann::json to_json() const;
};

/// Runs the cross-check suites. Brute-force parts respect options.limits
/// and throw CapExceeded beyond it.
VerifyReport run_verification(const VerifyOptions& options);

/// Every connected skew shape with exactly `cells` cells whose first row
/// and first column are nonempty. Built column by column, independently
/// of the ascent-sequence shape formulas.
void for_each_connected_skew_shape(int cells, const std::function<void(const SkewShape&)>& visit);

/// A skew shape with 1..max_cells cells, possibly disconnected.
SkewShape random_skew_shape(std::mt19937_64& rng, int max_cells);

/// All partitions of `total`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

}  // namespace minperm
