#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coverlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configurable resource guard (variable count, box size, generator cap) was exceeded.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t value, std::size_t limit)
      : Error(what + " (" + std::to_string(value) + " > " + std::to_string(limit) + ")"),
        value_(value),
        limit_(limit) {}

  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t value_;
  std::size_t limit_;
};

}  // namespace coverlab
