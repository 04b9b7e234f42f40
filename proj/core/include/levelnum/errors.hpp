#pragma once

#include <stdexcept>
#include <string>

namespace levelnum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad graph data, a spine that is not a
/// cycle, an improper coloring handed to relayer, and so on.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Edge-list text could not be parsed. `line()` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An exact computation refused its input because it exceeds an explicit
/// size gate (vertex, edge or fragment bound).
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace levelnum
