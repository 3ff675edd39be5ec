#include "minperm/json_io.hpp"

#include "minperm/error.hpp"

namespace minperm {

nlohmann::json tableau_to_json(const SkewTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  const SkewShape& shape = t.shape();
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < shape.inner_row(r); ++c) row.push_back(nullptr);
    for (int v : t.rows()[r]) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return {{"shape", format_shape(shape)}, {"rows", std::move(rows)}};
}

SkewTableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw InvalidInput("tableau JSON needs a \"rows\" array");
  }
  std::vector<int> outer;
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw InvalidInput("tableau rows must be arrays");
    int nulls = 0;
    std::vector<int> values;
    for (const auto& cell : row) {
      if (cell.is_null()) {
        if (!values.empty()) throw InvalidInput("null cells must precede filled cells in a row");
        ++nulls;
      } else if (cell.is_number_integer()) {
        values.push_back(cell.get<int>());
      } else {
        throw InvalidInput("tableau cells must be integers or null");
      }
    }
    outer.push_back(nulls + static_cast<int>(values.size()));
    inner.push_back(nulls);
    rows.push_back(std::move(values));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  SkewShape shape(Partition(std::move(outer)), Partition(std::move(inner)));
  if (j.contains("shape") && j["shape"].is_string()) {
    if (!(parse_shape(j["shape"].get<std::string>()) == shape)) {
      throw InvalidInput("tableau \"shape\" disagrees with its rows");
    }
  }
  return SkewTableau(std::move(shape), std::move(rows));
}

nlohmann::json young_to_json(const YoungTableau& t) { return t.rows(); }

nlohmann::json path_to_json(const InsertionPath& path) {
  nlohmann::json out = nlohmann::json::array();
  for (const Cell& c : path) out.push_back({c.row, c.column});
  return out;
}

}  // namespace minperm
