#include <doctest.h>

#include <map>
#include <set>

#include "minperm/bijection.hpp"
#include "minperm/counting.hpp"
#include "minperm/enumerate.hpp"
#include "minperm/error.hpp"
#include "minperm/json_io.hpp"
#include "minperm/verify.hpp"

using namespace minperm;

namespace {

using Rows = std::vector<std::vector<int>>;

const char* const kSixteen = "16 13 4 1 7 3 14 12 9 5 2 11 10 6 15 8";

}  // namespace

TEST_CASE("permutation to tableau: worked values") {
  SUBCASE("the 16-element example") {
    const SkewTableau t = perm_to_tableau(parse_permutation(kSixteen));
    CHECK(format_shape(t.shape()) == "5,5,4,3,3,3,1,1/3,2,2,2");
    CHECK(t.rows() == Rows{{6, 8}, {2, 10, 15}, {5, 11}, {9}, {1, 3, 12}, {4, 7, 14}, {13}, {16}});
    const std::vector<std::vector<int>> columns_bottom_up{
        {16, 13, 4, 1}, {7, 3}, {14, 12, 9, 5, 2}, {11, 10, 6}, {15, 8}};
    for (int col = 1; col <= 5; ++col) {
      const auto [top, bottom] = *t.shape().column_extent(col);
      std::vector<int> read;
      for (int r = bottom; r >= top; --r) read.push_back(*t.value(r, col));
      CHECK(read == columns_bottom_up[static_cast<std::size_t>(col - 1)]);
    }
    CHECK(tableau_to_perm(t) == parse_permutation(kSixteen));
  }
  CHECK(perm_to_tableau(parse_permutation("321")).rows() == Rows{{1}, {2}, {3}});
  CHECK(perm_to_tableau(parse_permutation("2143")).rows() == Rows{{1, 3}, {2, 4}});
  CHECK(perm_to_tableau(parse_permutation("3142")).rows() == Rows{{1, 2}, {3, 4}});
  CHECK(perm_to_tableau(parse_permutation("21")).rows() == Rows{{1}, {2}});
}

TEST_CASE("tableau to permutation: worked values") {
  const SkewShape col5(Partition({1, 1, 1, 1, 1}));
  CHECK(tableau_to_perm(SkewTableau(col5, {{1}, {2}, {3}, {4}, {5}})) == Permutation::reverse_identity(5));
  CHECK(tableau_to_perm(SkewTableau(SkewShape(Partition({2, 2})), {{1, 3}, {2, 4}})) == parse_permutation("2143"));
}

TEST_CASE("bijection errors") {
  SUBCASE("non-minimal permutations name the failed condition") {
    try {
      perm_to_tableau(parse_permutation("132"));
      FAIL("no throw");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("start with a descent") != std::string::npos);
    }
    CHECK_THROWS_AS(perm_to_tableau(parse_permutation("21354")), InvalidInput);
    CHECK_THROWS_AS(perm_to_tableau(parse_permutation("1")), InvalidInput);
  }
  SUBCASE("non-2-regular tableaux are refused") {
    CHECK_THROWS_AS(tableau_to_perm(SkewTableau(SkewShape(Partition({3, 3, 3})), {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})),
                    InvalidInput);
    CHECK_THROWS_AS(tableau_to_perm(SkewTableau(SkewShape(Partition({2, 1})), {{1, 2}, {3}})), InvalidInput);
  }
}

TEST_CASE("round trip over every minimal permutation up to length 9") {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const Permutation& p : enumerate_minimal(n)) {
      const SkewTableau t = perm_to_tableau(p);
      CHECK(is_two_regular(t));
      CHECK(tableau_to_perm(t) == p);
      ++seen;
    }
  }
  Count expected = 0;
  for (long n = 2; n <= 9; ++n) {
    for (long d = 1; d < n; ++d) expected += count_minimal(d, n);
  }
  CHECK(Count(static_cast<unsigned long>(seen)) == expected);
}

TEST_CASE("round trip over every 2-regular tableau up to 9 cells") {
  std::map<std::vector<int>, std::size_t> by_columns;
  for (int cells = 2; cells <= 9; ++cells) {
    for_each_connected_skew_shape(cells, [&](const SkewShape& s) {
      if (!is_two_regular(s)) return;
      for_each_skew_syt(s, [&](const SkewTableau& t) {
        const Permutation p = tableau_to_perm(t);
        CHECK(is_minimal(p));
        CHECK(perm_to_tableau(p) == t);
        ++by_columns[maximal_decreasing_runs(p).parts()];
      });
    });
  }
  for (const auto& [runs, count] : by_columns) {
    CHECK(count_by_ascents(AscentSequence(runs)) == static_cast<unsigned long>(count));
  }
}

TEST_CASE("tableau_from_runs builds the shape from run lengths") {
  const SkewTableau t = tableau_from_runs({{16, 13, 4, 1}, {7, 3}, {14, 12, 9, 5, 2}, {11, 10, 6}, {15, 8}});
  CHECK(t == perm_to_tableau(parse_permutation(kSixteen)));
  CHECK_THROWS_AS(tableau_from_runs({{2, 1}, {3}}), InvalidInput);
}

TEST_CASE("tableau JSON") {
  const SkewTableau t = perm_to_tableau(parse_permutation(kSixteen));
  const auto j = tableau_to_json(t);
  CHECK(j["shape"] == "5,5,4,3,3,3,1,1/3,2,2,2");
  CHECK(j["rows"][0].dump() == "[null,null,null,6,8]");
  CHECK(j["rows"][7].dump() == "[16]");
  CHECK(tableau_from_json(j) == t);

  const auto straight = tableau_to_json(perm_to_tableau(parse_permutation("2143")));
  CHECK(straight.dump() == R"({"rows":[[1,3],[2,4]],"shape":"2,2/∅"})");
  CHECK(tableau_from_json(straight) == perm_to_tableau(parse_permutation("2143")));

  SUBCASE("inconsistent input") {
    auto bad = j;
    bad["shape"] = "5,5,4,3,3,3,1,1/3,2,2,1";
    CHECK_THROWS_AS(tableau_from_json(bad), InvalidInput);
    CHECK_THROWS_AS(tableau_from_json(nlohmann::json::parse(R"({"rows":[[1,2],[4,3]]})")), InvalidInput);
    CHECK_THROWS_AS(tableau_from_json(nlohmann::json::parse(R"([1,2])")), InvalidInput);
  }
}
