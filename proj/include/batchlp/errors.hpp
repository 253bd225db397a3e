#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace batchlp {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variable has lower bound above its upper bound.
class InfeasibleBounds : public Error {
 public:
  using Error::Error;
};

// A pivot was requested on an element whose magnitude is below the pivot
// tolerance.
class DegeneratePivot : public Error {
 public:
  using Error::Error;
};

class InvalidBox : public Error {
 public:
  using Error::Error;
};

// A single LP does not fit into the configured memory budget.
class BatchTooLarge : public Error {
 public:
  using Error::Error;
};

// LPs in one batch have different (m, n) shapes.
class HeterogeneousBatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refused an instance above its combinatorial budget.
class OracleBudget : public Error {
 public:
  using Error::Error;
};

// Malformed input LP or a violated call precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace batchlp
