#include "minperm/tableau.hpp"

#include <algorithm>
#include <map>

#include "minperm/determinant.hpp"
#include "minperm/error.hpp"
#include "tokens.hpp"

namespace minperm {

namespace {

constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // U+2205

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
    total_ += parts_[i];
  }
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(0)), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

SkewShape::SkewShape(Partition outer, const Partition& inner) : outer_(std::move(outer)) {
  if (inner.length() > outer_.length()) {
    throw InvalidInput("inner partition has more rows than the outer one");
  }
  inner_.assign(outer_.length(), 0);
  for (std::size_t r = 0; r < inner.length(); ++r) {
    if (inner.part(r) > outer_.part(r)) {
      throw InvalidInput("inner partition is not contained in the outer one");
    }
    inner_[r] = inner.part(r);
  }
  cells_ = outer_.total() - inner.total();
}

Partition SkewShape::inner() const {
  std::vector<int> parts;
  for (int v : inner_) {
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

bool SkewShape::contains(int row, int col) const noexcept {
  if (row < 1 || static_cast<std::size_t>(row) > rows()) return false;
  const auto r = static_cast<std::size_t>(row - 1);
  return col > inner_row(r) && col <= outer_row(r);
}

std::optional<std::pair<int, int>> SkewShape::column_extent(int col) const {
  int top = 0;
  int bottom = 0;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (col > inner_row(r) && col <= outer_row(r)) {
      if (top == 0) top = static_cast<int>(r) + 1;
      bottom = static_cast<int>(r) + 1;
    }
  }
  if (top == 0) return std::nullopt;
  return std::pair{top, bottom};
}

SkewShape conjugate(const SkewShape& s) { return SkewShape(conjugate(s.outer()), conjugate(s.inner())); }

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.rows()) throw InvalidInput("row count does not match the shape");
  const int n = shape_.cell_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.row_length(r)) {
      throw InvalidInput("row " + std::to_string(r + 1) + " has the wrong number of entries");
    }
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw InvalidInput("entries must be exactly 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw InvalidInput("row " + std::to_string(r + 1) + " is not increasing");
      }
    }
  }
  for (std::size_t r = 1; r < rows_.size(); ++r) {
    for (int col = shape_.inner_row(r) + 1; col <= shape_.outer_row(r); ++col) {
      auto above = value(static_cast<int>(r), col);
      if (above && *above >= *value(static_cast<int>(r) + 1, col)) {
        throw InvalidInput("column " + std::to_string(col) + " is not increasing");
      }
    }
  }
}

std::optional<int> SkewTableau::value(int row, int col) const {
  if (!shape_.contains(row, col)) return std::nullopt;
  const auto r = static_cast<std::size_t>(row - 1);
  return rows_[r][static_cast<std::size_t>(col - 1 - shape_.inner_row(r))];
}

bool is_two_regular(const SkewShape& shape) {
  std::optional<std::pair<int, int>> prev;
  bool started = false;
  bool finished = false;
  for (int col = 1; col <= shape.columns(); ++col) {
    auto extent = shape.column_extent(col);
    if (!extent) {
      if (started) finished = true;
      continue;
    }
    if (finished) return false;  // gap between nonempty columns
    if (extent->second - extent->first + 1 < 2) return false;
    if (prev) {
      const int overlap = std::min(prev->second, extent->second) - std::max(prev->first, extent->first) + 1;
      if (overlap != 2) return false;
    }
    started = true;
    prev = extent;
  }
  return started;
}

SkewShape shape_from_ascent_sequence(const AscentSequence& a) {
  if (!a.all_parts_at_least_two()) {
    throw InvalidInput("ascent sequence " + format_ascent_sequence(a) +
                       " has a part below 2; no minimal permutation has it");
  }
  const std::size_t k = a.length();
  std::vector<int> outer(k);
  std::vector<int> inner(k);
  int suffix = 0;
  for (std::size_t i = k; i-- > 0;) {
    suffix += a[i];
    outer[i] = suffix - 2 * static_cast<int>(k - 1 - i);
    inner[i] = outer[i] - a[i];
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Count aitken_count(const SkewShape& shape) {
  const std::size_t r = shape.rows();
  if (shape.cell_count() == 0) return 1;
  RationalMatrix m(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const long arg = static_cast<long>(shape.outer_row(i)) - shape.inner_row(j) -
                       static_cast<long>(i) + static_cast<long>(j);
      m(i, j) = inverse_factorial(arg);
    }
  }
  Count count = require_integral(determinant(m) * Rational(factorial(shape.cell_count())),
                                 "skew tableau determinant");
  if (count < 0) throw InternalError("skew tableau determinant is negative: " + count.get_str());
  return count;
}

int hook_length(const Partition& lambda, int row, int col) {
  if (row < 1 || static_cast<std::size_t>(row) > lambda.length() || col < 1 ||
      col > lambda.part(static_cast<std::size_t>(row - 1))) {
    throw InvalidInput("cell (" + std::to_string(row) + "," + std::to_string(col) +
                       ") lies outside the partition");
  }
  const Partition conj = conjugate(lambda);
  return lambda.part(static_cast<std::size_t>(row - 1)) + conj.part(static_cast<std::size_t>(col - 1)) -
         row - col + 1;
}

Count hook_count(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Count product = 1;
  for (std::size_t r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      product *= lambda.part(r) + conj.part(static_cast<std::size_t>(c)) - static_cast<int>(r) - c - 1;
    }
  }
  const Count total = factorial(lambda.total());
  if (total % product != 0) throw InternalError("hook product does not divide |lambda|!");
  return Count(total / product);
}

namespace {

// Row r can take its next cell when that cell's upper neighbour is either
// outside the shape or already filled.
bool row_is_open(const SkewShape& shape, const std::vector<int>& filled, std::size_t r) {
  if (filled[r] >= shape.row_length(r)) return false;
  if (r == 0) return true;
  const int col = shape.inner_row(r) + filled[r] + 1;
  return col <= shape.inner_row(r - 1) + filled[r - 1];
}

}  // namespace

void for_each_skew_syt(const SkewShape& shape, const std::function<void(const SkewTableau&)>& visit,
                       int cap) {
  if (shape.cell_count() > cap) {
    throw CapExceeded("shape " + format_shape(shape) + " has " + std::to_string(shape.cell_count()) +
                      " cells, above the enumeration cap of " + std::to_string(cap));
  }
  const std::size_t rows = shape.rows();
  const int n = shape.cell_count();
  std::vector<int> filled(rows, 0);
  std::vector<std::vector<int>> entries(rows);
  for (std::size_t r = 0; r < rows; ++r) entries[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);

  std::function<void(int)> place = [&](int value) {
    if (value > n) {
      visit(SkewTableau(shape, entries));
      return;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_is_open(shape, filled, r)) continue;
      entries[r][static_cast<std::size_t>(filled[r])] = value;
      ++filled[r];
      place(value + 1);
      --filled[r];
    }
  };
  place(1);
}

std::vector<SkewTableau> enumerate_skew_syt(const SkewShape& shape, int cap) {
  std::vector<SkewTableau> out;
  for_each_skew_syt(shape, [&](const SkewTableau& t) { out.push_back(t); }, cap);
  return out;
}

Count count_skew_syt(const SkewShape& shape) {
  const std::size_t rows = shape.rows();
  std::vector<int> filled(rows, 0);
  std::map<std::vector<int>, Count> memo;
  std::function<Count(int)> count = [&](int remaining) -> Count {
    if (remaining == 0) return 1;
    if (auto it = memo.find(filled); it != memo.end()) return it->second;
    Count total = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_is_open(shape, filled, r)) continue;
      ++filled[r];
      total += count(remaining - 1);
      --filled[r];
    }
    memo.emplace(filled, total);
    return total;
  };
  return count(shape.cell_count());
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return std::string(kEmptySet);
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

std::string format_shape(const SkewShape& shape) {
  return format_partition(shape.outer()) + "/" + format_partition(shape.inner());
}

namespace {

Partition parse_partition_at(std::string_view text, std::size_t base) {
  auto tokens = detail::split_tokens(text, ", \t");
  if (tokens.empty() || (tokens.size() == 1 && tokens[0].text == kEmptySet)) return Partition();
  std::vector<int> parts;
  for (auto tok : tokens) {
    tok.offset += base;
    parts.push_back(detail::parse_positive(tok));
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw ParseError("partition parts must be weakly decreasing", tokens[i].offset + base);
    }
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(std::string_view text) { return parse_partition_at(text, 0); }

SkewShape parse_shape(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition_at(text, 0));
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("a shape has at most one '/'", text.find('/', slash + 1) + 1);
  }
  Partition outer = parse_partition_at(text.substr(0, slash), 0);
  Partition inner = parse_partition_at(text.substr(slash + 1), slash + 1);
  try {
    return SkewShape(std::move(outer), inner);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), slash + 2);
  }
}

}  // namespace minperm
