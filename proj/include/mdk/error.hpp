#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands disagree on (n, k), length or scalar mode.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A dense matrix has a nonzero entry outside the lattice |i - j| = l*k.
class OffLatticeNonzero : public Error {
 public:
  OffLatticeNonzero(std::size_t row, std::size_t col)
      : Error("nonzero entry (" + std::to_string(row) + ", " + std::to_string(col) +
              ") lies off the diagonal lattice"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// The matrix has no inverse. what() carries a witness when one is known.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for the scalar mode of its input.
class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar text or matrix document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdk
