#pragma once

#include <stdexcept>
#include <string>

namespace latbasis {

// Root of every error raised by the library.
class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public LatticeError {
 public:
  explicit SingularMatrix(const std::string& what) : LatticeError("singular matrix: " + what) {}
};

class RankDeficient : public LatticeError {
 public:
  explicit RankDeficient(const std::string& what) : LatticeError("rank deficient: " + what) {}
};

class DimensionMismatch : public LatticeError {
 public:
  explicit DimensionMismatch(const std::string& what) : LatticeError("dimension mismatch: " + what) {}
};

class DivisionByZero : public LatticeError {
 public:
  explicit DivisionByZero(const std::string& what) : LatticeError("division by zero: " + what) {}
};

class TooLarge : public LatticeError {
 public:
  explicit TooLarge(const std::string& what) : LatticeError("instance too large: " + what) {}
};

class InvariantViolation : public LatticeError {
 public:
  explicit InvariantViolation(const std::string& what) : LatticeError("invariant violated: " + what) {}
};

class ParseError : public LatticeError {
 public:
  explicit ParseError(const std::string& what) : LatticeError("parse error: " + what) {}
};

}  // namespace latbasis
