#pragma once

#include <stdexcept>
#include <string>

namespace primal {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: operands built over different rings.
struct ContextMismatchError : Error {
  using Error::Error;
};

// Variable or generator index out of range.
struct IndexError : Error {
  using Error::Error;
};

// Module elements of different ranks combined.
struct RankMismatchError : Error {
  using Error::Error;
};

// Input text rejected; position is 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

// Hypothesis failures.  These report that an input pair does not satisfy a
// precondition of the requested computation; they are expected outcomes,
// not bugs.
struct NotContainedError : Error {
  using Error::Error;
};
struct NotCompleteIntersectionError : Error {
  using Error::Error;
};
struct JacobianConditionError : Error {
  using Error::Error;
};
struct BadSplitError : Error {
  using Error::Error;
};
struct NotALineCaseError : Error {
  using Error::Error;
};
struct NotICISError : Error {
  using Error::Error;
};

// An internal consistency audit failed.  Results are never returned past a
// failed audit; seeing this exception means a defect in the library itself.
struct CheckError : Error {
  using Error::Error;
};

}  // namespace primal
