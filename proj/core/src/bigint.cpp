#include "minperm/bigint.hpp"

#include "minperm/error.hpp"

namespace minperm {

Count factorial(long n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Count result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Rational inverse_factorial(long m) {
  if (m < 0) return 0;
  Rational r(Count(1), factorial(m));
  r.canonicalize();
  return r;
}

Count require_integral(Rational value, const char* what) {
  value.canonicalize();
  if (value.get_den() != 1) {
    throw InternalError(std::string(what) + " is not an integer: " + value.get_str());
  }
  return value.get_num();
}

std::string to_string(const Count& value) { return value.get_str(); }

}  // namespace minperm
