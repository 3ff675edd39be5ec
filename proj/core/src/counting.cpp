#include "minperm/counting.hpp"

#include "minperm/error.hpp"

namespace minperm {

Count catalan(long n) {
  if (n < 0) throw InvalidInput("catalan index must be nonnegative");
  return require_integral(Rational(binomial(2 * n, n), Count(n + 1)), "Catalan number");
}

RationalMatrix ascent_matrix(const AscentSequence& a) {
  if (!a.all_parts_at_least_two()) {
    throw InvalidInput("ascent sequence " + format_ascent_sequence(a) + " has a part below 2");
  }
  const std::size_t k = a.length();
  RationalMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    long run = 0;
    for (std::size_t j = i; j < k; ++j) {
      run += a[j];
      m(i, j) = inverse_factorial(run - static_cast<long>(j - i));
    }
    if (i >= 1) m(i, i - 1) = 1;
    if (i >= 2) m(i, i - 2) = a[i - 1] == 2 ? 1 : 0;
  }
  return m;
}

Count count_from_matrix(const RationalMatrix& m, int n) {
  Count count = require_integral(determinant(m) * Rational(factorial(n)), "ascent determinant");
  if (count < 0) throw InternalError("ascent determinant is negative: " + count.get_str());
  return count;
}

Count count_by_ascents(const AscentSequence& a) { return count_from_matrix(ascent_matrix(a), a.total()); }

void for_each_composition_min2(int n, int k, const std::function<void(const AscentSequence&)>& visit) {
  if (k <= 0 || n < 2 * k) return;
  std::vector<int> parts(static_cast<std::size_t>(k), 2);
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int remaining) {
    if (idx + 1 == parts.size()) {
      parts[idx] = remaining;
      visit(AscentSequence(parts));
      return;
    }
    const int later = 2 * static_cast<int>(parts.size() - idx - 1);
    for (int v = 2; v <= remaining - later; ++v) {
      parts[idx] = v;
      fill(idx + 1, remaining - v);
    }
  };
  fill(0, n);
}

std::vector<AscentSequence> compositions_min2(int n, int k) {
  std::vector<AscentSequence> out;
  for_each_composition_min2(n, k, [&](const AscentSequence& a) { out.push_back(a); });
  return out;
}

Count count_minimal(long d, long n) {
  if (d < 1 || n < d + 1 || n > 2 * d) return 0;
  Count total = 0;
  for_each_composition_min2(static_cast<int>(n), static_cast<int>(n - d),
                            [&](const AscentSequence& a) { total += count_by_ascents(a); });
  return total;
}

namespace {

Count pow_ui(unsigned long base, long exp) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

Count count_n_minus_2(long n) {
  if (n < 4) throw InvalidInput("the one-ascent closed form needs n >= 4");
  return pow_ui(2, n) - Count(n) * (n - 1) - 2;
}

Count count_n_minus_3(long n) {
  if (n < 5) throw InvalidInput("the two-ascent closed form needs n >= 5");
  const Count m = n;
  const Count poly = m * m * m * m - 7 * m * m * m + 19 * m * m - 21 * m + 2;
  const Count half = require_integral(Rational(poly, 2), "two-ascent polynomial half");
  return pow_ui(3, n) - (m * m - 2 * m + 4) * pow_ui(2, n - 1) + half;
}

Count count_odd_length(long n) {
  if (n < 1) throw InvalidInput("odd-length closed form needs n >= 1");
  Rational power = n >= 2 ? Rational(pow_ui(2, n - 2)) : Rational(1, 2);
  return require_integral(power * Rational(Count(n) * catalan(n + 1)), "odd-length closed form");
}

Count count_refined(long n, long i) {
  if (n < 1 || i < 1 || i > n) {
    throw InvalidInput("refined count needs 1 <= i <= n (got n=" + std::to_string(n) +
                       ", i=" + std::to_string(i) + ")");
  }
  return binomial(2 * n + 1, n - 1) * binomial(n - 1, i - 1);
}

Count count_three_row(long n, long k) {
  if (n < 1 || k < 1 || k > (n + 1) / 2) {
    throw InvalidInput("three-row count needs 1 <= k <= (n+1)/2 (got n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")");
  }
  if (k == 1) return binomial(2 * n + 1, n - 1);
  const Rational value = Rational(Count(n - 2 * k + 2), Count(k - 1)) *
                         Rational(binomial(n - 1, k - 2) * binomial(2 * n + 1, n - 1));
  return require_integral(value, "three-row tableau count");
}

std::optional<Count> closed_form(long d, long n) {
  if (d < 1 || n < d + 1 || n > 2 * d) return Count(0);
  if (n == d + 1) return Count(1);
  if (n == 2 * d) return catalan(d);
  if (n == 2 * d - 1 && d >= 2) return count_odd_length(d - 1);
  if (d == n - 2 && n >= 4) return count_n_minus_2(n);
  if (d == n - 3 && n >= 5) return count_n_minus_3(n);
  return std::nullopt;
}

}  // namespace minperm
