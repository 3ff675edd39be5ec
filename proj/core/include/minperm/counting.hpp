#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "minperm/bigint.hpp"
#include "minperm/determinant.hpp"
#include "minperm/permutation.hpp"

namespace minperm {

/// C(2n, n) / (n + 1).
Count catalan(long n);

/// The banded k x k matrix whose determinant times n! counts minimal
/// permutations with ascent sequence `a`:
///   (i, i)       1 / a_i!
///   (i, j), j>i  1 / (a_i + ... + a_j - (j - i))!
///   (i, i-1)     1
///   (i, i-2)     1 if a_{i-1} = 2, else 0
///   below that   0
/// Throws InvalidInput if a part is below two.
RationalMatrix ascent_matrix(const AscentSequence& a);

/// n! det(ascent_matrix(a)); asserted integral.
Count count_by_ascents(const AscentSequence& a);

/// Same, starting from an explicit (possibly perturbed) matrix.
Count count_from_matrix(const RationalMatrix& m, int n);

/// All compositions of n into k parts, each at least two, in
/// lexicographic order. There are C(n-k-1, k-1) of them.
std::vector<AscentSequence> compositions_min2(int n, int k);
void for_each_composition_min2(int n, int k, const std::function<void(const AscentSequence&)>& visit);

/// f_d(n) as the sum of count_by_ascents over compositions of n into n-d
/// parts; zero outside d+1 <= n <= 2d.
Count count_minimal(long d, long n);

/// 2^n - n(n-1) - 2, for n >= 4.
Count count_n_minus_2(long n);

/// 3^n - (n^2 - 2n + 4) 2^(n-1) + (n^4 - 7n^3 + 19n^2 - 21n + 2)/2, for n >= 5.
Count count_n_minus_3(long n);

/// f_{n+1}(2n+1) = 2^(n-2) n C_{n+1}, for n >= 1.
Count count_odd_length(long n);

/// Minimal permutations of length 2n+1 with n+1 descents whose only
/// consecutive descents are 2i-1, 2i: C(2n+1, n-1) C(n-1, i-1).
Count count_refined(long n, long i);

/// Standard Young tableaux of shape (n, n+1-k, k), 1 <= k <= (n+1)/2.
Count count_three_row(long n, long k);

/// Closed-form value of f_d(n) where one is known: out-of-range zeros,
/// d = n-1, n-2, n-3, n = 2d and n = 2d-1. nullopt otherwise.
std::optional<Count> closed_form(long d, long n);

}  // namespace minperm
