#pragma once

#include <stdexcept>
#include <string>

namespace bqsolve {

/// Bad command line: unknown solver, unknown flag, missing required argument.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed problem input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid solver parameters or a problem outside a solver's capacity.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// An assignment that does not conform to its model (wrong label set or a
/// value outside the vartype domain).
class ConformanceError : public std::invalid_argument {
 public:
  explicit ConformanceError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace bqsolve
