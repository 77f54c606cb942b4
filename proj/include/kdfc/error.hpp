#pragma once

#include <stdexcept>
#include <string>

namespace kdfc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (rows/cols/lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A square matrix that must be invertible is not.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A linear system has no solution.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (degree out of range, bad key length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that should have the M-companion block shape does not.
class NotMCompanionError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON, table file, hex string).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdfc
