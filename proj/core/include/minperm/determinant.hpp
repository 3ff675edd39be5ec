#pragma once

#include <cstddef>
#include <vector>

#include "minperm/bigint.hpp"

namespace minperm {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  /// Zero matrix; `dim` must be at least 1.
  explicit RationalMatrix(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// Bareiss fraction-free elimination on a row-major integer matrix.
/// Row swaps are used only to escape zero pivots.
Count integer_determinant(std::vector<Count> entries, std::size_t dim);

/// Exact determinant: each row is scaled by the lcm of its denominators,
/// the integer determinant is taken, and the scale factors are divided
/// back out.
Rational determinant(const RationalMatrix& m);

}  // namespace minperm
