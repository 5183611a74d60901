#pragma once

#include <stdexcept>
#include <string>

namespace geozeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed complex, chain or permutation text. `line()` is 1-based; 0 means
/// the problem is not tied to a single line (e.g. a missing section).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A linear system that was required to be regular turned out singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// A chain that should bound (over the rationals) does not.
class NotNullHomologousError : public Error {
 public:
  using Error::Error;
};

/// Two computations of the same quantity disagreed; always a bug.
class InternalMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace geozeta
