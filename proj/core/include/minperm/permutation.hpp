#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minperm {

/// A permutation of {1..n} in one-line notation.
///
/// Positions are 1-based in every public function that returns or accepts a
/// position (descent sets, Knuth move positions, fragment bounds). The
/// underlying word is exposed as a 0-based vector for iteration.
class Permutation {
 public:
  /// Validates that `word` is a rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(std::size_t n);
  static Permutation reverse_identity(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  const std::vector<int>& word() const noexcept { return word_; }
  std::span<const int> view() const noexcept { return word_; }

  /// Value at 1-based position `pos`.
  int at(std::size_t pos) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Lengths of the maximal decreasing substrings, left to right.
class AscentSequence {
 public:
  /// Parts must be nonempty and strictly positive.
  explicit AscentSequence(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// Every part is at least two (the shape of every minimal permutation).
  bool all_parts_at_least_two() const noexcept;

  friend bool operator==(const AscentSequence&, const AscentSequence&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Which copy of a duplicated value survives a random-loss step.
enum class Copy { First, Second };

/// One duplication followed by random loss on the fragment [first, last].
struct DupLossStep {
  std::size_t first = 1;  // 1-based, inclusive
  std::size_t last = 1;   // 1-based, inclusive
  std::vector<Copy> keep;  // one entry per fragment element, left to right
};

/// Order-isomorphic relabelling of distinct integers onto 1..k.
Permutation standardize(std::span<const int> word);

std::vector<std::size_t> descent_set(std::span<const int> word);
std::vector<std::size_t> ascent_set(std::span<const int> word);
std::size_t descent_count(std::span<const int> word) noexcept;

inline std::vector<std::size_t> descent_set(const Permutation& p) { return descent_set(p.view()); }
inline std::vector<std::size_t> ascent_set(const Permutation& p) { return ascent_set(p.view()); }
inline std::size_t descent_count(const Permutation& p) noexcept { return descent_count(p.view()); }

/// True iff some subsequence of `text` standardizes to `pattern`.
/// Exhaustive search over subsequences.
bool contains_pattern(const Permutation& text, const Permutation& pattern);

AscentSequence maximal_decreasing_runs(std::span<const int> word);
inline AscentSequence maximal_decreasing_runs(const Permutation& p) {
  return maximal_decreasing_runs(p.view());
}

/// Structural minimality test: starts and ends with a descent, and every
/// ascent i sits inside a window pi_{i-1..i+2} of type 2143 or 3142.
bool is_minimal(std::span<const int> word) noexcept;
inline bool is_minimal(const Permutation& p) noexcept { return is_minimal(p.view()); }

/// Human-readable reason `p` fails the structural test, or nullopt.
std::optional<std::string> minimality_violation(const Permutation& p);

/// Definitional oracle: every single-element deletion strictly loses a
/// descent after standardization.
bool is_minimal_by_deletion(std::span<const int> word);
inline bool is_minimal_by_deletion(const Permutation& p) { return is_minimal_by_deletion(p.view()); }

/// Duplicate pi_first..pi_last in place, then drop the copy of each value
/// that `step.keep` does not select.
Permutation duplicate_loss(const Permutation& p, const DupLossStep& step);

/// Space-separated for n <= 9, comma-separated otherwise.
std::string format_permutation(const Permutation& p);

/// Accepts spaces, commas, or both as separators; a single separator-free
/// token of several digits is read digit by digit ("2143").
Permutation parse_permutation(std::string_view text);

/// Comma-separated list of positive integers, e.g. "2,2,3".
AscentSequence parse_ascent_sequence(std::string_view text);
std::string format_ascent_sequence(const AscentSequence& a);

}  // namespace minperm
