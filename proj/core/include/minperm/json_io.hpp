#pragma once

#include <nlohmann/json.hpp>

#include "minperm/bigint.hpp"
#include "minperm/rsk.hpp"
#include "minperm/tableau.hpp"

namespace minperm {

/// {"shape": "6,5,2,2/3,1", "rows": [[null, null, null, 7, 8, 11], ...]}
/// with null in place of every inner cell.
nlohmann::json tableau_to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json young_to_json(const YoungTableau& t);
nlohmann::json path_to_json(const InsertionPath& path);

/// Big integers are always decimal strings.
inline nlohmann::json count_to_json(const Count& c) { return c.get_str(); }

}  // namespace minperm
