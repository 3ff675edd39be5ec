#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minperm/bigint.hpp"
#include "minperm/permutation.hpp"

namespace minperm {

/// Weakly decreasing sequence of positive integers. May be empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const noexcept { return total_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based part, zero past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Transpose of the Ferrers diagram: part i counts parts of `p` that are >= i.
Partition conjugate(const Partition& p);

/// Cells of `outer` not in `inner`, English convention: row 1 on top,
/// column 1 on the left. The inner partition is stored zero-padded to the
/// length of the outer one.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, const Partition& inner = {});

  const Partition& outer() const noexcept { return outer_; }
  Partition inner() const;

  std::size_t rows() const noexcept { return outer_.length(); }
  int columns() const noexcept { return outer_.part(0); }
  /// 0-based row bounds: the row occupies columns (inner_row, outer_row].
  int inner_row(std::size_t r) const noexcept { return r < inner_.size() ? inner_[r] : 0; }
  int outer_row(std::size_t r) const noexcept { return outer_.part(r); }
  int row_length(std::size_t r) const noexcept { return outer_row(r) - inner_row(r); }
  int cell_count() const noexcept { return cells_; }

  /// 1-based cell membership test.
  bool contains(int row, int col) const noexcept;

  /// 1-based [top, bottom] rows of column `col`; nullopt if empty.
  std::optional<std::pair<int, int>> column_extent(int col) const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  std::vector<int> inner_;
  int cells_ = 0;
};

/// Conjugates both partitions.
SkewShape conjugate(const SkewShape& s);

/// A standard filling of a skew shape: entries 1..N, increasing along rows
/// and down columns. `rows[r]` lists the entries of the cells of row r
/// left to right (inner cells omitted).
class SkewTableau {
 public:
  /// Validates the filling; throws InvalidInput if it is not standard.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.cell_count(); }

  /// Entry at 1-based (row, col), or nullopt outside the skew shape.
  std::optional<int> value(int row, int col) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Every column has at least two cells, the nonempty columns are
/// contiguous, and each adjacent pair shares exactly two rows.
bool is_two_regular(const SkewShape& shape);
inline bool is_two_regular(const SkewTableau& t) { return is_two_regular(t.shape()); }

/// Conjugate presentation lambda'/mu' of the 2-regular shape with column
/// lengths `a`: row i has length a_i and adjacent rows overlap in two
/// columns. Throws InvalidInput if a part is below two.
SkewShape shape_from_ascent_sequence(const AscentSequence& a);

/// Number of standard fillings via N! det(1/(lambda_i - mu_j - i + j)!).
Count aitken_count(const SkewShape& shape);

/// lambda_row + lambda'_col - row - col + 1 for a 1-based cell.
int hook_length(const Partition& lambda, int row, int col);

/// |lambda|! / prod of hook lengths.
Count hook_count(const Partition& lambda);

inline constexpr int kDefaultTableauCap = 16;

/// Visits every standard filling once. Values 1..N are placed in turn,
/// each into an available cell, trying cells in row-major order. Refuses
/// shapes with more than `cap` cells.
void for_each_skew_syt(const SkewShape& shape,
                       const std::function<void(const SkewTableau&)>& visit,
                       int cap = kDefaultTableauCap);

std::vector<SkewTableau> enumerate_skew_syt(const SkewShape& shape, int cap = kDefaultTableauCap);

/// Counts standard fillings by the same backtracking, memoized on the
/// filled sub-shape so that disconnected shapes stay cheap.
Count count_skew_syt(const SkewShape& shape);

/// "outer/inner", parts comma-separated; an empty inner prints as "∅".
std::string format_shape(const SkewShape& shape);
std::string format_partition(const Partition& p);

/// Accepts "6,5,2,2/3,1", "3,3", "3,3/" and "3,3/∅".
SkewShape parse_shape(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace minperm
