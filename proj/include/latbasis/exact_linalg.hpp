#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

namespace detail {

// In-place fraction-free (Bareiss) forward elimination on the first `pivots`
// columns of m, with row swaps when a pivot vanishes. Every column of m is
// carried along, so trailing columns act as right-hand sides. Returns the
// number of row swaps, or nullopt when a pivot column is entirely zero.
inline std::optional<std::size_t> bareiss_forward(IntMatrix& m, std::size_t pivots) {
  const std::size_t n = m.rows();
  std::size_t swaps = 0;
  Int prev = 1;
  for (std::size_t k = 0; k < pivots; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return std::nullopt;
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(k, c), m(r, c));
      ++swaps;
    }
    const Int& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  return swaps;
}

}  // namespace detail

// Exact determinant by fraction-free elimination.
inline Int det(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("det of non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  auto swaps = detail::bareiss_forward(work, work.rows());
  if (!swaps) return 0;
  Int d = work(work.rows() - 1, work.cols() - 1);
  return (*swaps % 2 == 1) ? Int(-d) : d;
}

// Solves B X = C exactly. Bareiss elimination on [B | C] followed by an
// integral back substitution on det(B) * X; the rational X is formed last.
// This is the single linear-solver entry point: a faster solver can replace
// the body without touching callers.
inline RatMatrix solve_exact(const IntMatrix& b, const IntMatrix& c) {
  if (!b.square()) throw DimensionMismatch("solve_exact needs a square system matrix");
  if (b.rows() != c.rows()) throw DimensionMismatch("solve_exact row counts differ");
  const std::size_t n = b.rows();
  const std::size_t k = c.cols();
  RatMatrix x(n, k);
  if (n == 0) return x;

  IntMatrix aug = b.hcat(c);
  auto swaps = detail::bareiss_forward(aug, n);
  if (!swaps) throw SingularMatrix("det(B) = 0");
  const Int d = aug(n - 1, n - 1);  // +-det(B)

  std::vector<Int> scaled(n);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Int acc = d * aug(ii, n + col);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * scaled[j];
      if (acc % aug(ii, ii) != 0) throw InvariantViolation("non-exact back substitution");
      scaled[ii] = acc / aug(ii, ii);
    }
    for (std::size_t ii = 0; ii < n; ++ii) x(ii, col) = make_rational(scaled[ii], d);
  }
  return x;
}

inline RatVector solve_exact(const IntMatrix& b, std::span<const Int> c) {
  IntMatrix rhs(c.size(), 1);
  rhs.set_col(0, c);
  return solve_exact(b, rhs).col_vector(0);
}

// Left-to-right scan keeping a column iff it raises the rank of the kept set.
// Kept columns are held in fraction-free echelon form with content removed.
inline std::vector<std::size_t> find_independent_columns(const IntMatrix& a) {
  struct Reduced {
    std::size_t pivot;
    IntVector v;
  };
  std::vector<Reduced> kept;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    IntVector v = a.col_vector(c);
    for (const Reduced& u : kept) {
      if (v[u.pivot] == 0) continue;
      const Int f = v[u.pivot];
      const Int up = u.v[u.pivot];
      for (std::size_t r = 0; r < v.size(); ++r) v[r] = up * v[r] - f * u.v[r];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    Int g = gcd_many(std::span<const Int>(v));
    for (Int& x : v) x /= g;
    kept.push_back({p, std::move(v)});
    out.push_back(c);
  }
  return out;
}

inline std::vector<std::size_t> find_independent_rows(const IntMatrix& b) {
  return find_independent_columns(b.transpose());
}

inline std::size_t rank(const IntMatrix& a) { return find_independent_columns(a).size(); }

inline IntMatrix naive_matmul(const IntMatrix& m, const IntMatrix& n) {
  if (m.cols() != n.rows()) throw DimensionMismatch("matmul inner dimensions");
  IntMatrix out(m.rows(), n.cols());
  for (std::size_t j = 0; j < n.cols(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Int& nkj = n(k, j);
      if (nkj == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) += m(i, k) * nkj;
    }
  return out;
}

inline RatMatrix mul(const IntMatrix& m, const RatMatrix& n) {
  if (m.cols() != n.rows()) throw DimensionMismatch("matmul inner dimensions");
  RatMatrix out(m.rows(), n.cols());
  for (std::size_t j = 0; j < n.cols(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& nkj = n(k, j);
      if (nkj == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) += Rational(m(i, k)) * nkj;
    }
  return out;
}

inline RatVector mul(const IntMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matvec inner dimensions");
  RatVector out(m.rows(), Rational(0));
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] += Rational(m(i, k)) * v[k];
  }
  return out;
}

struct XadicStats {
  std::size_t digit_bits = 0;         // X = 2^digit_bits
  std::size_t digit_columns = 0;      // nonzero digit columns over all four sign products
  std::size_t skipped_columns = 0;    // all-zero digit columns that were never multiplied
  std::size_t block_products = 0;     // schoolbook block multiplications performed
};

namespace detail {

inline IntMatrix positive_part(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) > 0) out(r, c) = m(r, c);
  return out;
}

// Product of two nonnegative matrices through the base-2^bits expansion of n.
inline IntMatrix xadic_nonneg(const IntMatrix& m, const IntMatrix& n, std::size_t bits, std::size_t block_width,
                              XadicStats& stats) {
  const std::size_t a = n.rows();
  struct DigitColumn {
    std::size_t source;
    std::size_t power;
  };
  // Expanded columns N^(i), skipping the ones that are entirely zero.
  std::vector<DigitColumn> where;
  std::vector<IntVector> digits;
  const Int mask = (Int(1) << bits) - 1;
  for (std::size_t j = 0; j < n.cols(); ++j) {
    const std::size_t len = bit_length(max_norm(n.col(j)));
    const std::size_t p = (len + bits - 1) / bits;
    for (std::size_t power = 0; power < p; ++power) {
      IntVector dcol(a);
      bool any = false;
      for (std::size_t r = 0; r < a; ++r) {
        dcol[r] = (n(r, j) >> (power * bits)) & mask;
        any = any || dcol[r] != 0;
      }
      if (!any) {
        ++stats.skipped_columns;
        continue;
      }
      where.push_back({j, power});
      digits.push_back(std::move(dcol));
    }
  }
  stats.digit_columns += digits.size();

  IntMatrix out(m.rows(), n.cols());
  for (std::size_t start = 0; start < digits.size(); start += block_width) {
    const std::size_t stop = std::min(digits.size(), start + block_width);
    IntMatrix block(a, stop - start);
    for (std::size_t j = start; j < stop; ++j) block.set_col(j - start, digits[j]);
    IntMatrix prod = naive_matmul(m, block);
    ++stats.block_products;
    for (std::size_t j = start; j < stop; ++j) {
      const auto [source, power] = where[j];
      for (std::size_t r = 0; r < m.rows(); ++r) out(r, source) += prod(r, j - start) << (power * bits);
    }
  }
  return out;
}

}  // namespace detail

// M * N computed from the X-adic expansion of N, X the smallest power of two
// exceeding ||M||. Signs are handled by splitting both factors into
// nonnegative parts. Digit columns are multiplied in blocks of rows(N)^k.
inline IntMatrix xadic_matmul(const IntMatrix& m, const IntMatrix& n, std::size_t block_exponent = 1,
                              XadicStats* stats = nullptr) {
  if (m.cols() != n.rows()) throw DimensionMismatch("xadic_matmul inner dimensions");
  if (block_exponent < 1) throw DimensionMismatch("xadic_matmul block exponent must be >= 1");
  XadicStats local;
  XadicStats& st = stats ? *stats : local;
  st = XadicStats{};

  const Int norm = max_norm(m);
  if (norm == 0 || n.cols() == 0) return IntMatrix(m.rows(), n.cols());
  st.digit_bits = bit_length(norm);  // 2^bits > ||M||

  std::size_t width = 1;
  for (std::size_t i = 0; i < block_exponent && width < (std::size_t(1) << 20); ++i)
    width *= std::max<std::size_t>(n.rows(), 1);

  const IntMatrix mp = detail::positive_part(m);
  IntMatrix neg_m(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) neg_m(r, c) = mp(r, c) - m(r, c);
  const IntMatrix np = detail::positive_part(n);
  IntMatrix neg_n(n.rows(), n.cols());
  for (std::size_t c = 0; c < n.cols(); ++c)
    for (std::size_t r = 0; r < n.rows(); ++r) neg_n(r, c) = np(r, c) - n(r, c);

  IntMatrix pp = detail::xadic_nonneg(mp, np, st.digit_bits, width, st);
  IntMatrix pn = detail::xadic_nonneg(mp, neg_n, st.digit_bits, width, st);
  IntMatrix np_ = detail::xadic_nonneg(neg_m, np, st.digit_bits, width, st);
  IntMatrix nn = detail::xadic_nonneg(neg_m, neg_n, st.digit_bits, width, st);

  IntMatrix out(m.rows(), n.cols());
  for (std::size_t c = 0; c < out.cols(); ++c)
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = pp(r, c) - pn(r, c) - np_(r, c) + nn(r, c);
  return out;
}

}  // namespace latbasis
