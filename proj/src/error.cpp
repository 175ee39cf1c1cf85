#include "pmod/error.hpp"

namespace pmod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::GradeOrderViolation: return "GradeOrderViolation";
    case ErrorKind::NotOneParameter: return "NotOneParameter";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::SyntaxError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace pmod
