#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcmres {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (e.g. a multidegree
/// that is not a lattice element, a non-square-free input to a square-free API).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Hypotheses of a theorem-backed operation are not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable size cap was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap, std::size_t limit, std::size_t reached)
      : Error("resource cap '" + cap + "' exceeded: limit " + std::to_string(limit) +
              ", reached " + std::to_string(reached)),
        cap_(std::move(cap)),
        limit_(limit),
        reached_(reached) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t reached_;
};

/// An internal mathematical consistency check failed (e.g. a boundary map
/// that does not square to zero). Always a bug, never an input problem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcmres
