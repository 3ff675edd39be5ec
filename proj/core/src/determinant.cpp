#include "minperm/determinant.hpp"

#include <utility>

#include "minperm/error.hpp"

namespace minperm {

RationalMatrix::RationalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw InvalidInput("matrix dimension must be at least 1");
}

Count integer_determinant(std::vector<Count> m, std::size_t dim) {
  if (m.size() != dim * dim) throw InvalidInput("matrix entry count does not match dimension");
  if (dim == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> Count& { return m[r * dim + c]; };
  int sign = 1;
  Count prev = 1;
  Count tmp;
  for (std::size_t k = 0; k < dim; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < dim && at(pivot, k) == 0) ++pivot;
      if (pivot == dim) return 0;
      for (std::size_t c = 0; c < dim; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        tmp = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Count det = at(dim - 1, dim - 1);
  return sign < 0 ? Count(-det) : det;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Count> scaled(n * n);
  Count scale_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Count row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      // num * (lcm / den) is exact by construction.
      Count factor;
      mpz_divexact(factor.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
      scaled[r * n + c] = m(r, c).get_num() * factor;
    }
    scale_product *= row_lcm;
  }
  Rational det(integer_determinant(std::move(scaled), n), scale_product);
  det.canonicalize();
  return det;
}

}  // namespace minperm
