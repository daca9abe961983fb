#pragma once

#include <stdexcept>
#include <string>

namespace ringmotif {

// Bad input data: malformed files, broken matrix invariants, out-of-range
// parameters.  The CLI maps this family to exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text that could not be parsed; carries a 1-based line number when known.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& msg, int line)
      : ValidationError(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A matrix on which Moran's I is undefined (all cells equal, or n < 2).
class DegenerateInputError : public ValidationError {
public:
  explicit DegenerateInputError(const std::string& msg) : ValidationError(msg) {}
};

// A request that exceeds a configured resource bound (e.g. the exact TSP
// solver's state-space budget).  CLI exit code 3.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failure.  CLI exit code 4.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ringmotif
