#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prismcurv {

/// Invalid argument values (non-positive widths, bad bounds, unbinned input).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simplex or edge that was asked for is not part of the complex.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed contact input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Self-contact (i == j) in the input.
class SelfLoopError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace prismcurv
