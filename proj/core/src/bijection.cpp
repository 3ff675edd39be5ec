#include "minperm/bijection.hpp"

#include "minperm/error.hpp"

namespace minperm {

SkewTableau tableau_from_runs(const std::vector<std::vector<int>>& runs) {
  std::vector<int> lengths;
  for (const auto& run : runs) lengths.push_back(static_cast<int>(run.size()));
  // Row j of the conjugate shape is column j of the tableau.
  const SkewShape columns = shape_from_ascent_sequence(AscentSequence(lengths));
  const SkewShape shape = conjugate(columns);

  std::vector<std::vector<int>> rows(shape.rows());
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    rows[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);
  }
  for (std::size_t j = 0; j < runs.size(); ++j) {
    const int col = static_cast<int>(j) + 1;
    // Column j spans rows inner'_j + 1 .. outer'_j; fill from the bottom.
    std::size_t t = 0;
    for (int row = columns.outer_row(j); row > columns.inner_row(j); --row) {
      const auto r = static_cast<std::size_t>(row - 1);
      rows[r][static_cast<std::size_t>(col - 1 - shape.inner_row(r))] = runs[j][t++];
    }
  }
  return SkewTableau(shape, std::move(rows));
}

SkewTableau perm_to_tableau(const Permutation& p) {
  if (auto why = minimality_violation(p)) {
    throw InvalidInput("not a minimal permutation: " + *why);
  }
  const AscentSequence lengths = maximal_decreasing_runs(p);
  std::vector<std::vector<int>> runs;
  auto it = p.word().begin();
  for (int len : lengths.parts()) {
    runs.emplace_back(it, it + len);
    it += len;
  }
  return tableau_from_runs(runs);
}

Permutation tableau_to_perm(const SkewTableau& t) {
  if (!is_two_regular(t)) throw InvalidInput("tableau is not 2-regular");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.size()));
  for (int col = 1; col <= t.shape().columns(); ++col) {
    auto extent = t.shape().column_extent(col);
    if (!extent) continue;
    for (int row = extent->second; row >= extent->first; --row) word.push_back(*t.value(row, col));
  }
  return Permutation(std::move(word));
}

}  // namespace minperm
