#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minperm/permutation.hpp"
#include "minperm/tableau.hpp"

namespace minperm {

/// 1-based (row, column) position in a tableau.
struct Cell {
  int row = 1;
  int column = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Straight-shape tableau on distinct integers (not necessarily 1..N):
/// rows increase left to right, columns increase downward.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// Validates shape and strictness; throws InvalidInput otherwise.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  bool contains(int value) const noexcept;
  std::optional<Cell> find(int value) const noexcept;

  /// Requires entries 1..N.
  SkewTableau to_skew() const;
  /// Requires an empty inner shape.
  static YoungTableau from_skew(const SkewTableau& t);

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Cells touched by one row insertion, top row first, ending at the new
/// cell. Rows increase by one and columns weakly decrease.
using InsertionPath = std::vector<Cell>;

struct Insertion {
  YoungTableau tableau;
  InsertionPath path;
};

/// Schensted row insertion. Throws InvalidInput if `value` is present.
Insertion row_insert(const YoungTableau& p, int value);

struct RskResult {
  YoungTableau insertion;  // P
  YoungTableau recording;  // Q, on positions 1..N
  std::vector<InsertionPath> paths;
};

/// Inserts a word of distinct integers left to right.
RskResult rsk(std::span<const int> word);
inline RskResult rsk(const Permutation& p) { return rsk(p.view()); }

struct Eviction {
  YoungTableau tableau;
  int value;
};

/// Reverse bumping from a removable corner; the evicted value leaves the
/// first row. Throws InvalidInput if `corner` is not a removable corner.
Eviction inverse_bump(const YoungTableau& p, Cell corner);

/// Recovers the word from (P, Q) by inverse bumping at the cell holding
/// the largest remaining recording entry.
std::vector<int> inverse_rsk(const YoungTableau& insertion, const YoungTableau& recording);

/// Elementary Knuth transformations on a triple at positions t..t+2 with
/// values a < b < c:
///   BAC: b a c -> b c a      BCA: b c a -> b a c
///   ACB: a c b -> c a b      CAB: c a b -> a c b
enum class KnuthKind { BAC, BCA, ACB, CAB };

KnuthKind inverse(KnuthKind kind) noexcept;
std::string to_string(KnuthKind kind);

struct KnuthMove {
  std::size_t position;  // 1-based index of the leftmost entry of the triple
  KnuthKind kind;
  friend bool operator==(const KnuthMove&, const KnuthMove&) = default;
};

/// Swaps the two entries the move acts on. Throws InvalidInput naming the
/// pattern actually found when the triple does not match `move.kind`.
Permutation apply_knuth_move(const Permutation& w, const KnuthMove& move);

/// Parameters (n, i) of the class of minimal permutations of length 2n+1
/// with n+1 descents whose only consecutive descents are 2i-1 and 2i.
struct RefinedIndex {
  std::size_t n;
  std::size_t i;
  friend bool operator==(const RefinedIndex&, const RefinedIndex&) = default;
};

std::optional<RefinedIndex> refined_index(const Permutation& p);

/// Keeps pi_1..pi_{2i}, then the later even-position entries in order,
/// then the later odd-position entries in order. Throws InvalidInput when
/// `p` is outside every refined class.
Permutation rearrange_tail(const Permutation& p);

/// Elementary moves carrying `p` to rearrange_tail(p). Sweep s moves
/// pi_{2i+2s} forward past the odd-position block one swap at a time; the
/// first swap of a sweep is witnessed by its left neighbour (BAC), the
/// rest by the next odd-position entry on the right (ACB).
std::vector<KnuthMove> knuth_chain(const Permutation& p);

/// Insertion tableau of a member of a refined class; its shape is
/// (n, n+1-k, k) with k <= min(i, n-i+1). Throws InvalidInput otherwise.
YoungTableau forward_map(const Permutation& p);

/// Rebuilds the preimage of `t` in the class with parameter `i`: evicts
/// the cells outside shape (n, i) from northeast to southwest, assembles
/// the candidate 2-regular tableau, reads it off, and keeps it only if
/// forward_map reproduces `t`.
std::optional<Permutation> inverse_forward_map(const YoungTableau& t, std::size_t i);

}  // namespace minperm
