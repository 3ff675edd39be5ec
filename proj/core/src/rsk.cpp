#include "minperm/rsk.hpp"

#include <algorithm>

#include "minperm/bijection.hpp"
#include "minperm/error.hpp"

namespace minperm {

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> all;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw InvalidInput("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw InvalidInput("tableau row lengths must be weakly decreasing");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c - 1] >= row[c]) throw InvalidInput("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= row[c]) throw InvalidInput("tableau columns must increase");
      all.push_back(row[c]);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidInput("tableau entries must be distinct");
  }
}

Partition YoungTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::size_t YoungTableau::size() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool YoungTableau::contains(int value) const noexcept { return find(value).has_value(); }

std::optional<Cell> YoungTableau::find(int value) const noexcept {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), value);
    if (it != rows_[r].end() && *it == value) {
      return Cell{static_cast<int>(r) + 1, static_cast<int>(it - rows_[r].begin()) + 1};
    }
  }
  return std::nullopt;
}

SkewTableau YoungTableau::to_skew() const { return SkewTableau(SkewShape(shape()), rows_); }

YoungTableau YoungTableau::from_skew(const SkewTableau& t) {
  if (!t.shape().inner().empty()) throw InvalidInput("expected a straight-shape tableau");
  return YoungTableau(t.rows());
}

Insertion row_insert(const YoungTableau& p, int value) {
  if (p.contains(value)) {
    throw InvalidInput("value " + std::to_string(value) + " is already in the tableau");
  }
  auto rows = p.rows();
  InsertionPath path;
  int carry = value;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({carry});
      path.push_back({static_cast<int>(r) + 1, 1});
      break;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    const int col = static_cast<int>(it - row.begin()) + 1;
    path.push_back({static_cast<int>(r) + 1, col});
    if (it == row.end()) {
      row.push_back(carry);
      break;
    }
    std::swap(*it, carry);
  }
  return {YoungTableau(std::move(rows)), std::move(path)};
}

RskResult rsk(std::span<const int> word) {
  RskResult out;
  std::vector<std::vector<int>> recording;
  for (std::size_t t = 0; t < word.size(); ++t) {
    auto ins = row_insert(out.insertion, word[t]);
    const Cell created = ins.path.back();
    if (static_cast<std::size_t>(created.row) > recording.size()) recording.emplace_back();
    recording[static_cast<std::size_t>(created.row - 1)].push_back(static_cast<int>(t) + 1);
    out.insertion = std::move(ins.tableau);
    out.paths.push_back(std::move(ins.path));
  }
  out.recording = YoungTableau(std::move(recording));
  return out;
}

Eviction inverse_bump(const YoungTableau& p, Cell corner) {
  auto rows = p.rows();
  const auto r = static_cast<std::size_t>(corner.row - 1);
  const bool removable = corner.row >= 1 && r < rows.size() &&
                         static_cast<std::size_t>(corner.column) == rows[r].size() &&
                         (r + 1 == rows.size() || rows[r + 1].size() < rows[r].size());
  if (!removable) {
    throw InvalidInput("cell (" + std::to_string(corner.row) + "," + std::to_string(corner.column) +
                       ") is not a removable corner");
  }
  int carry = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  for (std::size_t above = r; above-- > 0;) {
    auto& row = rows[above];
    // Largest entry smaller than carry; column strictness guarantees one.
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    --it;
    std::swap(*it, carry);
  }
  return {YoungTableau(std::move(rows)), carry};
}

std::vector<int> inverse_rsk(const YoungTableau& insertion, const YoungTableau& recording) {
  if (!(insertion.shape() == recording.shape())) {
    throw InvalidInput("insertion and recording tableaux differ in shape");
  }
  const std::size_t n = insertion.size();
  std::vector<int> word(n);
  YoungTableau p = insertion;
  auto q = recording.rows();
  for (std::size_t t = n; t >= 1; --t) {
    const auto cell = YoungTableau(q).find(static_cast<int>(t));
    if (!cell) throw InvalidInput("recording tableau is not standard");
    auto ev = inverse_bump(p, *cell);
    word[t - 1] = ev.value;
    p = std::move(ev.tableau);
    auto& qrow = q[static_cast<std::size_t>(cell->row - 1)];
    qrow.pop_back();
    if (qrow.empty()) q.pop_back();
  }
  return word;
}

KnuthKind inverse(KnuthKind kind) noexcept {
  switch (kind) {
    case KnuthKind::BAC: return KnuthKind::BCA;
    case KnuthKind::BCA: return KnuthKind::BAC;
    case KnuthKind::ACB: return KnuthKind::CAB;
    case KnuthKind::CAB: return KnuthKind::ACB;
  }
  return kind;
}

std::string to_string(KnuthKind kind) {
  switch (kind) {
    case KnuthKind::BAC: return "bac";
    case KnuthKind::BCA: return "bca";
    case KnuthKind::ACB: return "acb";
    case KnuthKind::CAB: return "cab";
  }
  return "?";
}

namespace {

// Standardized type of the triple, as a string of letters a < b < c.
std::string triple_type(int x, int y, int z) {
  const std::vector<int> triple{x, y, z};
  std::string out;
  const Permutation st = standardize(triple);
  for (int v : st.word()) out += static_cast<char>('a' + v - 1);
  return out;
}

}  // namespace

Permutation apply_knuth_move(const Permutation& w, const KnuthMove& move) {
  if (move.position < 1 || move.position + 2 > w.size()) {
    throw InvalidInput("Knuth move position " + std::to_string(move.position) + " out of range");
  }
  auto word = w.word();
  const std::size_t t = move.position - 1;
  const std::string found = triple_type(word[t], word[t + 1], word[t + 2]);
  if (found != to_string(move.kind)) {
    throw InvalidInput("Knuth move " + to_string(move.kind) + " at position " +
                       std::to_string(move.position) + " found pattern " + found);
  }
  if (move.kind == KnuthKind::BAC || move.kind == KnuthKind::BCA) {
    std::swap(word[t + 1], word[t + 2]);
  } else {
    std::swap(word[t], word[t + 1]);
  }
  return Permutation(std::move(word));
}

std::optional<RefinedIndex> refined_index(const Permutation& p) {
  const std::size_t len = p.size();
  if (len < 3 || len % 2 == 0 || !is_minimal(p)) return std::nullopt;
  const std::size_t n = (len - 1) / 2;
  if (descent_count(p) != n + 1) return std::nullopt;
  const auto& w = p.word();
  std::optional<std::size_t> start;
  for (std::size_t j = 0; j + 2 < len; ++j) {
    if (w[j] > w[j + 1] && w[j + 1] > w[j + 2]) {
      if (start) return std::nullopt;
      start = j + 1;
    }
  }
  if (!start || *start % 2 == 0) return std::nullopt;
  return RefinedIndex{n, (*start + 1) / 2};
}

namespace {

RefinedIndex require_refined(const Permutation& p) {
  auto idx = refined_index(p);
  if (!idx) {
    throw InvalidInput("permutation " + format_permutation(p) +
                       " is not a minimal permutation of length 2n+1 with n+1 descents");
  }
  return *idx;
}

}  // namespace

Permutation rearrange_tail(const Permutation& p) {
  const auto [n, i] = require_refined(p);
  const auto& w = p.word();
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(2 * i));
  for (std::size_t pos = 2 * i + 2; pos <= 2 * n; pos += 2) out.push_back(w[pos - 1]);
  for (std::size_t pos = 2 * i + 1; pos <= 2 * n + 1; pos += 2) out.push_back(w[pos - 1]);
  return Permutation(std::move(out));
}

std::vector<KnuthMove> knuth_chain(const Permutation& p) {
  const auto [n, i] = require_refined(p);
  const std::size_t tail_pairs = n - i;
  std::vector<KnuthMove> moves;
  Permutation current = p;
  for (std::size_t sweep = 1; sweep <= tail_pairs; ++sweep) {
    for (std::size_t j = 1; j + sweep <= tail_pairs + 1; ++j) {
      // The j-th odd-position entry sits here, with the entry to move
      // forward immediately to its right.
      const std::size_t odd_pos = 2 * i + (sweep - 1) + 2 * (j - 1) + 1;
      const KnuthMove move = j == 1 ? KnuthMove{odd_pos - 1, KnuthKind::BAC}
                                    : KnuthMove{odd_pos, KnuthKind::ACB};
      try {
        current = apply_knuth_move(current, move);
      } catch (const InvalidInput& e) {
        throw InternalError(std::string("Knuth chain produced an illegal move: ") + e.what());
      }
      moves.push_back(move);
    }
  }
  return moves;
}

YoungTableau forward_map(const Permutation& p) {
  require_refined(p);
  return rsk(p).insertion;
}

std::optional<Permutation> inverse_forward_map(const YoungTableau& t, std::size_t i) {
  const std::size_t size = t.size();
  if (size < 3 || size % 2 == 0 || t.rows().size() != 3) return std::nullopt;
  const std::size_t n = (size - 1) / 2;
  if (i < 1 || i > n) return std::nullopt;
  const auto& rows = t.rows();
  const std::size_t k = rows[2].size();
  if (rows[0].size() != n || rows[1].size() != n + 1 - k) return std::nullopt;
  if (k > std::min(i, n - i + 1)) return std::nullopt;

  // Cells outside (n, i): row 2 beyond column i, then all of row 3. They are
  // removed from the northeast corner toward the southwest.
  std::vector<Cell> outside;
  for (std::size_t col = n + 1 - k; col > i; --col) outside.push_back({2, static_cast<int>(col)});
  for (std::size_t col = k; col >= 1; --col) outside.push_back({3, static_cast<int>(col)});

  YoungTableau rest = t;
  std::vector<int> evicted;
  try {
    for (const Cell& cell : outside) {
      auto ev = inverse_bump(rest, cell);
      evicted.push_back(ev.value);
      rest = std::move(ev.tableau);
    }
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  // Last evicted was inserted first.
  std::reverse(evicted.begin(), evicted.end());
  const auto& top = rest.rows()[0];
  const auto& bottom = rest.rows()[1];

  std::vector<std::vector<int>> runs;
  for (std::size_t j = 0; j + 1 < i; ++j) runs.push_back({bottom[j], top[j]});
  runs.push_back({bottom[i - 1], top[i - 1], evicted[0]});
  for (std::size_t m = 1; m <= n - i; ++m) runs.push_back({top[i - 1 + m], evicted[m]});

  try {
    const Permutation candidate = tableau_to_perm(tableau_from_runs(runs));
    auto idx = refined_index(candidate);
    if (!idx || idx->i != i || !(forward_map(candidate) == t)) return std::nullopt;
    return candidate;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

}  // namespace minperm
