#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilpot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DSL syntax or reference error, located at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// Enumeration of indecomposables did not finish within the configured limits.
class LimitsExceeded : public Error {
 public:
  using Error::Error;
};

/// A reduction method was requested whose hypotheses do not hold.
class MethodInapplicable : public Error {
 public:
  using Error::Error;
};

/// End(M)/rad End(M) is bigger than Q but no idempotent could be found over Q.
class SplitFieldNeeded : public Error {
 public:
  using Error::Error;
};

/// A verified statement was contradicted by the computation.
class Inconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace nilpot
