#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "minperm/error.hpp"

namespace minperm::detail {

struct Token {
  std::string_view text;
  std::size_t offset;  // 1-based
};

inline bool is_separator(char c, std::string_view separators) {
  return separators.find(c) != std::string_view::npos;
}

inline std::vector<Token> split_tokens(std::string_view text, std::string_view separators) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i], separators)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j], separators)) ++j;
    out.push_back({text.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline int parse_positive(const Token& token) {
  int value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected a positive integer, found '" + std::string(token.text) + "'",
                     token.offset);
  }
  if (value <= 0) {
    throw ParseError("expected a positive integer, found '" + std::string(token.text) + "'",
                     token.offset);
  }
  return value;
}

}  // namespace minperm::detail
