#pragma once

#include <gmpxx.h>

#include <string>

namespace minperm {

/// Arbitrary-precision nonnegative integer used for every count.
using Count = mpz_class;
/// Exact rational in canonical form (positive denominator, gcd 1).
using Rational = mpq_class;

Count factorial(long n);

/// C(n, k); zero when k < 0 or k > n.
Count binomial(long n, long k);

/// 1 / m! with the convention 1/m! = 0 for m < 0.
Rational inverse_factorial(long m);

/// Converts an exact rational that must be an integer. Throws
/// InternalError naming `what` otherwise.
Count require_integral(Rational value, const char* what);

std::string to_string(const Count& value);

}  // namespace minperm
