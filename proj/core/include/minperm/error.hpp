#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minperm {

/// Malformed or out-of-contract input supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed; `position` is the 1-based character
/// offset of the offending token.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InvalidInput(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A brute-force request beyond the configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An arithmetic identity that must hold did not (e.g. a determinant that
/// should be integral was not). Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minperm
