#pragma once

#include <vector>

#include "minperm/permutation.hpp"
#include "minperm/tableau.hpp"

namespace minperm {

/// Places the j-th maximal decreasing run of a minimal permutation in
/// column j, read from the bottom cell upward. The shape is the conjugate
/// of shape_from_ascent_sequence(runs). Throws InvalidInput naming the
/// violated condition when `p` is not minimal.
SkewTableau perm_to_tableau(const Permutation& p);

/// The 2-regular tableau whose column j, read bottom-up, is `runs[j]`.
/// Every run needs at least two entries and together they must use 1..N
/// once; throws InvalidInput if the filling is not standard.
SkewTableau tableau_from_runs(const std::vector<std::vector<int>>& runs);

/// Reads each column from its lowest cell upward, columns left to right.
/// Throws InvalidInput unless `t` is 2-regular.
Permutation tableau_to_perm(const SkewTableau& t);

}  // namespace minperm
