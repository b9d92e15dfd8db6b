#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"

namespace latbasis {

// Dense column-major matrix. Columns are the natural unit here: they hold
// lattice generators and solution vectors, so col() hands out a contiguous span.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  // Row-major literal, convenient for tests: Matrix<Int>::from_rows({{6, 1}, {3, 5}}).
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r);
    return from_rows(tmp);
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged row literal");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  T& at(std::size_t r, std::size_t c) {
    check(r, c);
    return (*this)(r, c);
  }
  const T& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return (*this)(r, c);
  }

  std::span<T> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const T> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

  std::vector<T> col_vector(std::size_t c) const {
    auto s = col(c);
    return {s.begin(), s.end()};
  }

  std::vector<T> row_vector(std::size_t r) const {
    std::vector<T> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
  }

  void set_col(std::size_t c, std::span<const T> v) {
    if (v.size() != rows_) throw DimensionMismatch("set_col length");
    std::copy(v.begin(), v.end(), col(c).begin());
  }
  void set_col(std::size_t c, const std::vector<T>& v) { set_col(c, std::span<const T>(v)); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) m.set_col(j, col(idx[j]));
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t i = 0; i < idx.size(); ++i) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  // [this | other]
  Matrix hcat(const Matrix& other) const {
    if (other.rows_ != rows_ && !other.empty() && !empty()) throw DimensionMismatch("hcat row counts");
    const std::size_t r = empty() && cols_ == 0 ? other.rows_ : rows_;
    Matrix m(r, cols_ + other.cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw DimensionMismatch("index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

// Largest absolute entry (0 for an empty matrix).
inline Int max_norm(const IntMatrix& m) {
  Int best = 0;
  for (const Int& v : m.data()) best = std::max(best, abs_int(v));
  return best;
}

inline Int max_norm(std::span<const Int> v) {
  Int best = 0;
  for (const Int& x : v) best = std::max(best, abs_int(x));
  return best;
}

inline Int squared_norm(std::span<const Int> v) {
  Int s = 0;
  for (const Int& x : v) s += x * x;
  return s;
}

inline Rational squared_norm(std::span<const Rational> v) {
  Rational s = 0;
  for (const Rational& x : v) s += x * x;
  return s;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = Rational(m(r, c));
  return out;
}

inline bool is_integral(const RatMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& q) { return is_integral(q); });
}

// Throws InvariantViolation if any entry is fractional.
inline IntMatrix to_integral(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!is_integral(m(r, c))) throw InvariantViolation("expected integral matrix entry");
      out(r, c) = num(m(r, c));
    }
  return out;
}

inline RatVector to_rational(std::span<const Int> v) {
  RatVector out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

inline IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e(n, Int(0));
  e[i] = 1;
  return e;
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace latbasis
