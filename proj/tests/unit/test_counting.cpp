#include <doctest.h>

#include <map>

#include "minperm/counting.hpp"
#include "minperm/enumerate.hpp"
#include "minperm/error.hpp"
#include "minperm/tableau.hpp"
#include "oracles.hpp"

using namespace minperm;

namespace {

// f_d(n) by definition for n <= 8, cached across test cases.
const std::vector<std::uint64_t>& definitional(int n) {
  static std::map<int, std::vector<std::uint64_t>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, oracle::counts_by_definition(n)).first;
  return it->second;
}

Count pow2(long e) {
  Count c = 1;
  for (long i = 0; i < e; ++i) c *= 2;
  return c;
}

}  // namespace

TEST_CASE("Catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(20) == Count("6564120420"));
  for (int n = 1; n <= 15; ++n) {
    CHECK(catalan(n) == Count(static_cast<unsigned long>(oracle::binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1))));
  }
}

TEST_CASE("compositions with parts at least two") {
  const auto seven = compositions_min2(7, 3);
  REQUIRE(seven.size() == 3);
  CHECK(seven[0].parts() == std::vector<int>{2, 2, 3});
  CHECK(seven[1].parts() == std::vector<int>{2, 3, 2});
  CHECK(seven[2].parts() == std::vector<int>{3, 2, 2});
  for (int k = 1; k <= 5; ++k) {
    const auto only = compositions_min2(2 * k, k);
    REQUIRE(only.size() == 1);
    CHECK(only[0].parts() == std::vector<int>(static_cast<std::size_t>(k), 2));
  }
  CHECK(compositions_min2(5, 3).empty());
  for (int n = 2; n <= 16; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      CHECK(compositions_min2(n, k).size() == oracle::binomial(n - k - 1, k - 1));
    }
  }
}

TEST_CASE("ascent matrix determinants") {
  CHECK(count_by_ascents(AscentSequence({2, 2})) == 2);
  CHECK(count_by_ascents(AscentSequence({2, 2, 2})) == 5);
  for (int n = 4; n <= 14; ++n) {
    for (int k = 2; n - k >= 2; ++k) {
      CHECK(count_by_ascents(AscentSequence({k, n - k})) == binomial(n, k) - n);
    }
  }
  CHECK_THROWS_AS(count_by_ascents(AscentSequence({3, 1})), InvalidInput);

  SUBCASE("matrix entries") {
    const RationalMatrix m = ascent_matrix(AscentSequence({2, 3, 2}));
    CHECK(m(0, 0) == Rational(1, 2));
    CHECK(m(0, 1) == Rational(1, 24));  // 1/(2+3-1)!
    CHECK(m(0, 2) == Rational(1, 120)); // 1/(2+3+2-2)!
    CHECK(m(1, 0) == 1);
    CHECK(m(2, 0) == 0);                // a_2 = 3
    CHECK(ascent_matrix(AscentSequence({2, 2, 2}))(2, 0) == 1);
  }

  SUBCASE("agrees with the generic Aitken count on the same shape") {
    for (int n = 2; n <= 14; ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        for_each_composition_min2(n, k, [&](const AscentSequence& a) {
          CHECK_MESSAGE(count_by_ascents(a) == aitken_count(shape_from_ascent_sequence(a)),
                        format_ascent_sequence(a));
        });
      }
    }
  }

  SUBCASE("counts permutations with the given runs") {
    for (int n = 2; n <= 8; ++n) {
      std::map<std::vector<int>, long> by_runs;
      for (const Permutation& p : enumerate_minimal(static_cast<std::size_t>(n))) {
        ++by_runs[maximal_decreasing_runs(p).parts()];
      }
      for (int k = 1; 2 * k <= n; ++k) {
        for_each_composition_min2(n, k, [&](const AscentSequence& a) {
          CHECK_MESSAGE(count_by_ascents(a) == by_runs[a.parts()], format_ascent_sequence(a));
        });
      }
    }
  }
}

TEST_CASE("f_d(n) against the definition") {
  for (int n = 1; n <= 8; ++n) {
    const auto& expected = definitional(n);
    for (int d = 0; d < n; ++d) {
      CHECK_MESSAGE(count_minimal(d, n) == Count(static_cast<unsigned long>(expected[static_cast<std::size_t>(d)])),
                    "d=" << d << " n=" << n);
    }
  }
  CHECK(count_minimal(3, 6) == 5);
  CHECK(count_minimal(4, 7) == 84);
  CHECK(count_minimal(5, 9) == 672);
  CHECK(count_minimal(0, 5) == 0);
  CHECK(count_minimal(2, 5) == 0);
  CHECK(count_minimal(7, 3) == 0);
}

TEST_CASE("boundary values of f_d(n)") {
  for (long n = 2; n <= 20; ++n) {
    CHECK(count_minimal(n - 1, n) == 1);
    if (n % 2 == 0) CHECK(count_minimal(n / 2, n) == catalan(n / 2));
  }
}

TEST_CASE("closed forms") {
  CHECK(count_n_minus_2(4) == 2);
  CHECK(count_n_minus_2(5) == 10);
  CHECK(count_n_minus_3(5) == 0);
  CHECK(count_n_minus_3(6) == 5);
  CHECK(count_n_minus_3(7) == 84);
  CHECK(count_odd_length(1) == 1);
  CHECK(count_odd_length(2) == 10);
  CHECK(count_odd_length(3) == 84);
  CHECK(count_odd_length(4) == 672);
  CHECK_THROWS_AS(count_n_minus_2(3), InvalidInput);
  CHECK_THROWS_AS(count_n_minus_3(4), InvalidInput);
  CHECK_THROWS_AS(count_odd_length(0), InvalidInput);

  for (long n = 4; n <= 30; ++n) {
    CHECK(count_n_minus_2(n) == pow2(n) - n * (n - 1) - 2);
    CHECK(count_n_minus_2(n) == count_minimal(n - 2, n));
  }
  for (long n = 5; n <= 30; ++n) CHECK(count_n_minus_3(n) == count_minimal(n - 3, n));
  for (long n = 1; n <= 12; ++n) CHECK(count_odd_length(n) == count_minimal(n + 1, 2 * n + 1));
  for (long d = 1; d <= 10; ++d) CHECK(count_minimal(d, 2 * d) == catalan(d));
}

TEST_CASE("closed_form covers only known cells and agrees with the determinant sum") {
  int known = 0;
  for (long n = 1; n <= 16; ++n) {
    for (long d = 0; d <= n + 1; ++d) {
      if (auto v = closed_form(d, n)) {
        ++known;
        CHECK_MESSAGE(*v == count_minimal(d, n), "d=" << d << " n=" << n);
      }
    }
  }
  CHECK(known > 0);
  CHECK_FALSE(closed_form(8, 13).has_value());
  CHECK(closed_form(2, 5) == Count(0));
}

TEST_CASE("refined classes and three-row tableaux") {
  CHECK(count_refined(2, 1) == 5);
  CHECK(count_refined(2, 2) == 5);
  CHECK(count_refined(3, 2) == 42);
  CHECK(count_three_row(3, 1) == 21);
  CHECK(count_three_row(3, 2) == 21);
  CHECK(count_three_row(4, 2) == 168);
  CHECK_THROWS_AS(count_refined(3, 0), InvalidInput);
  CHECK_THROWS_AS(count_refined(3, 4), InvalidInput);
  CHECK_THROWS_AS(count_three_row(3, 3), InvalidInput);

  for (long n = 1; n <= 12; ++n) {
    Count total = 0;
    for (long i = 1; i <= n; ++i) {
      Count sum = 0;
      for (long k = 1; k <= std::min(i, n - i + 1); ++k) sum += count_three_row(n, k);
      CHECK(sum == count_refined(n, i));
      CHECK(count_refined(n, i) == count_refined(n, n - i + 1));
      total += count_refined(n, i);
    }
    CHECK(total <= count_odd_length(n));
  }
  for (long n = 1; n <= 9; ++n) {
    for (long k = 1; 2 * k <= n + 1; ++k) {
      CHECK(count_three_row(n, k) == hook_count(Partition({static_cast<int>(n), static_cast<int>(n + 1 - k),
                                                            static_cast<int>(k)})));
    }
  }
}
