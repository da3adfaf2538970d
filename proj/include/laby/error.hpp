#pragma once

#include <stdexcept>
#include <string>

namespace laby {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes do not compose, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different rings, or a field operation was requested
/// over a ring that is not a field.
class RingError : public Error {
 public:
  using Error::Error;
};

/// Malformed descriptor, JSON document or argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound would be exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An identity that the mathematics guarantees has failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace laby
