#include "minperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minperm/error.hpp"
#include "tokens.hpp"

namespace minperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  if (n == 0) throw InvalidInput("a permutation must have length at least 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidInput("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw InvalidInput("value " + std::to_string(v) + " appears twice");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reverse_identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(std::size_t pos) const {
  if (pos < 1 || pos > word_.size()) throw InvalidInput("position out of range");
  return word_[pos - 1];
}

AscentSequence::AscentSequence(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("an ascent sequence needs at least one part");
  for (int p : parts_) {
    if (p <= 0) throw InvalidInput("ascent sequence parts must be positive");
    total_ += p;
  }
}

bool AscentSequence::all_parts_at_least_two() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 2; });
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[order[rank]] == word[order[rank - 1]]) {
      throw InvalidInput("cannot standardize a word with repeated entry " +
                         std::to_string(word[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

std::vector<std::size_t> descent_set(std::span<const int> word) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) out.push_back(i + 1);
  }
  return out;
}

std::vector<std::size_t> ascent_set(std::span<const int> word) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] < word[i + 1]) out.push_back(i + 1);
  }
  return out;
}

std::size_t descent_count(std::span<const int> word) noexcept {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) d += word[i] > word[i + 1] ? 1 : 0;
  return d;
}

bool contains_pattern(const Permutation& text, const Permutation& pattern) {
  const std::size_t n = text.size();
  const std::size_t k = pattern.size();
  if (k > n) return false;
  // Walk all k-subsets of positions in lexicographic order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<int> sub(k);
  while (true) {
    for (std::size_t t = 0; t < k; ++t) sub[t] = text.word()[idx[t]];
    if (standardize(sub) == pattern) return true;
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + (t - 1)) --t;
    if (t == 0) return false;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

AscentSequence maximal_decreasing_runs(std::span<const int> word) {
  if (word.empty()) throw InvalidInput("empty word has no decreasing runs");
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return AscentSequence(std::move(parts));
}

namespace {

// Window pi_{i-1} pi_i pi_{i+1} pi_{i+2} around an ascent at i. It is of
// type 2143 or 3142 exactly when pi_i is the smallest and pi_{i+1} the
// largest of the four; the remaining two may come in either order.
bool window_is_admissible(int w0, int w1, int w2, int w3) noexcept {
  return w1 < w0 && w1 < w3 && w0 < w2 && w3 < w2;
}

}  // namespace

bool is_minimal(std::span<const int> word) noexcept {
  const std::size_t n = word.size();
  if (n < 2) return false;
  if (!(word[0] > word[1]) || !(word[n - 2] > word[n - 1])) return false;
  for (std::size_t i = 1; i + 2 < n; ++i) {
    if (word[i] < word[i + 1] &&
        !window_is_admissible(word[i - 1], word[i], word[i + 1], word[i + 2])) {
      return false;
    }
  }
  return true;
}

std::optional<std::string> minimality_violation(const Permutation& p) {
  const auto& w = p.word();
  const std::size_t n = w.size();
  if (n < 2) return "a permutation of length 1 has no descents";
  if (w[0] < w[1]) return "does not start with a descent (position 1 is an ascent)";
  if (w[n - 2] < w[n - 1]) {
    return "does not end with a descent (position " + std::to_string(n - 1) + " is an ascent)";
  }
  for (std::size_t i = 1; i + 2 < n; ++i) {
    if (w[i] < w[i + 1] && !window_is_admissible(w[i - 1], w[i], w[i + 1], w[i + 2])) {
      const std::vector<int> window{w[i - 1], w[i], w[i + 1], w[i + 2]};
      std::string type;
      const Permutation st = standardize(window);
      for (int v : st.word()) type += std::to_string(v);
      return "ascent at position " + std::to_string(i + 1) + " has window of type " + type +
             ", not 2143 or 3142";
    }
  }
  return std::nullopt;
}

bool is_minimal_by_deletion(std::span<const int> word) {
  const std::size_t n = word.size();
  if (n < 2) return false;
  const std::size_t d = descent_count(word);
  std::vector<int> shorter(n - 1);
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != skip) shorter[t++] = word[i];
    }
    if (descent_count(standardize(shorter)) >= d) return false;
  }
  return true;
}

Permutation duplicate_loss(const Permutation& p, const DupLossStep& step) {
  const std::size_t n = p.size();
  if (step.first < 1 || step.first > step.last || step.last > n) {
    throw InvalidInput("fragment bounds must satisfy 1 <= first <= last <= n");
  }
  const std::size_t len = step.last - step.first + 1;
  if (step.keep.size() != len) {
    throw InvalidInput("keep must have one entry per fragment element");
  }
  const auto& w = p.word();
  std::vector<int> out;
  out.reserve(n);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(step.first - 1));
  for (std::size_t t = 0; t < len; ++t) {
    if (step.keep[t] == Copy::First) out.push_back(w[step.first - 1 + t]);
  }
  for (std::size_t t = 0; t < len; ++t) {
    if (step.keep[t] == Copy::Second) out.push_back(w[step.first - 1 + t]);
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(step.last), w.end());
  return Permutation(std::move(out));
}

std::string format_permutation(const Permutation& p) {
  const char sep = p.size() <= 9 ? ' ' : ',';
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << sep;
    os << p.word()[i];
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  auto tokens = detail::split_tokens(text, ", \t\n\r");
  if (tokens.empty()) throw ParseError("empty permutation", 1);
  std::vector<int> word;
  if (tokens.size() == 1 && tokens[0].text.size() > 1 &&
      std::all_of(tokens[0].text.begin(), tokens[0].text.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    for (std::size_t i = 0; i < tokens[0].text.size(); ++i) {
      word.push_back(tokens[0].text[i] - '0');
    }
  } else {
    for (const auto& tok : tokens) word.push_back(detail::parse_positive(tok));
  }
  const std::size_t n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t offset = tokens.size() == 1 ? tokens[0].offset + i : tokens[i].offset;
    const int v = word[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw ParseError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n), offset);
    }
    if (seen[v]) throw ParseError("value " + std::to_string(v) + " repeated", offset);
    seen[v] = true;
  }
  return Permutation(std::move(word));
}

AscentSequence parse_ascent_sequence(std::string_view text) {
  auto tokens = detail::split_tokens(text, ", \t");
  if (tokens.empty()) throw ParseError("empty ascent sequence", 1);
  std::vector<int> parts;
  for (const auto& tok : tokens) parts.push_back(detail::parse_positive(tok));
  return AscentSequence(std::move(parts));
}

std::string format_ascent_sequence(const AscentSequence& a) {
  std::string out;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

}  // namespace minperm
