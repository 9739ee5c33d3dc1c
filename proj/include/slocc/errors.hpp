#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

/// Raised when a characteristic polynomial does not split over Q(i).
class EigenvalueOutsideField : public Error {
 public:
  using Error::Error;
};

class DimensionOutOfRange : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of the reduction; never a user error.
class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace slocc
