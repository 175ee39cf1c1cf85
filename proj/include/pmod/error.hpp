#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmod {

enum class ErrorKind {
  FieldMismatch,
  DivisionByZero,
  DimensionMismatch,
  PatternViolation,
  BasisMismatch,
  SyntaxError,
  GradeOrderViolation,
  NotOneParameter,
  UnsupportedField,
  InvalidWitness,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pmod
