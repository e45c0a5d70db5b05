#pragma once

#include <stdexcept>
#include <string>

namespace tvq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Inverse of the zero field element.
class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero field element") {}
};

/// A quantum factorial in a denominator vanished where the admissibility
/// conditions guarantee it cannot. Always an internal-consistency failure.
class DenominatorVanished : public Error {
 public:
  using Error::Error;
};

/// Malformed triangulation text. Carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class InvolutionError : public Error {
 public:
  using Error::Error;
};

/// Validation failures raised when turning a gluing spec into a closed 3-manifold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotClosed : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BadEdge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotManifold : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInCatalog : public Error {
 public:
  explicit NotInCatalog(const std::string& name) : Error("no builtin manifold named '" + name + "'") {}
};

}  // namespace tvq
