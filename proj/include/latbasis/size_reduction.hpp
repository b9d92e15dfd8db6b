#pragma once

// Post-processing of S = B Y by greedy vector balancing. Each column of Y is
// rounded to a nearby point of Y_i + Z^d without touching its pivot entry,
// which keeps the lattice and bounds every column's Euclidean norm.

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

struct BalanceChoice {
  std::size_t column = 0;
  std::vector<int> rounding;            // E in {0,1}^d
  std::vector<Rational> partial_norms;  // ||w||^2 after each index, in processing order
};

// Greedy 0/1 rounding: walking the indices in `order`, pick E_j minimizing
// the squared norm of the running sum w + (y_j - E_j) B_j. Ties pick 0.
// Indices missing from `order` keep E_j = 0 and contribute y_j B_j unchanged.
inline BalanceChoice balance_column(const IntMatrix& b, std::span<const Rational> y, std::span<const std::size_t> order) {
  if (y.size() != b.cols() || order.size() > b.cols()) throw DimensionMismatch("balance_column shapes");
  BalanceChoice out;
  out.rounding.assign(b.cols(), 0);
  RatVector w(b.rows(), Rational(0));
  RatVector keep(b.rows()), take(b.rows());
  std::vector<bool> seen(b.cols(), false);
  for (std::size_t j : order) {
    if (j >= b.cols() || seen[j]) throw DimensionMismatch("balance_column order must list distinct indices");
    seen[j] = true;
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (seen[j] || y[j] == 0) continue;
    for (std::size_t r = 0; r < b.rows(); ++r) w[r] += y[j] * b(r, j);
  }
  for (std::size_t j : order) {
    if (y[j] < 0 || y[j] > 1) throw InvariantViolation("balance_column needs entries in [0,1]");
    const Rational down = y[j];
    const Rational up = y[j] - 1;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      keep[r] = w[r] + down * b(r, j);
      take[r] = w[r] + up * b(r, j);
    }
    const Rational nk = squared_norm(std::span<const Rational>(keep));
    const Rational nt = squared_norm(std::span<const Rational>(take));
    if (nt < nk) {
      out.rounding[j] = 1;
      w = take;
      out.partial_norms.push_back(nt);
    } else {
      w = keep;
      out.partial_norms.push_back(nk);
    }
  }
  return out;
}

inline BalanceChoice balance_column(const IntMatrix& b, std::span<const Rational> y) {
  std::vector<std::size_t> order(b.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return balance_column(b, y, order);
}

struct ReducedBasis {
  IntMatrix basis;          // S' = B Y'
  RatMatrix coefficients;   // Y'
  std::vector<BalanceChoice> choices;
};

// Columns with pivot entry 1 become the pivot column of B. Every other column
// is balanced over its own support, the pivots from its diagonal onwards, so
// Y' stays triangular and the pivot entry (<= 1/2) is left in place.
inline ReducedBasis reduce_basis(const IntMatrix& b, const RatMatrix& y, std::span<const std::size_t> pivot_order) {
  if (!y.square() || y.rows() != b.cols() || pivot_order.size() != y.cols())
    throw DimensionMismatch("reduce_basis shapes");
  ReducedBasis out;
  out.coefficients = RatMatrix(y.rows(), y.cols());
  for (std::size_t i = 0; i < y.cols(); ++i) {
    const std::size_t p = pivot_order[i];
    const Rational diag = y(p, i);
    if (diag == 1) {
      out.coefficients(p, i) = 1;
      continue;
    }
    const RatVector yi = y.col_vector(i);
    for (std::size_t k = 0; k < i; ++k)
      if (yi[pivot_order[k]] != 0) throw InvariantViolation("coefficients are not triangular in pivot order");
    BalanceChoice choice = balance_column(b, yi, pivot_order.subspan(i));
    choice.column = i;
    for (std::size_t r = 0; r < y.rows(); ++r) out.coefficients(r, i) = yi[r] - Rational(choice.rounding[r]);
    if (out.coefficients(p, i) != diag) throw InvariantViolation("size reduction changed a pivot coefficient");
    out.choices.push_back(std::move(choice));
  }
  const RatMatrix s = mul(b, out.coefficients);
  if (!is_integral(s)) throw InvariantViolation("reduced basis is not integral");
  out.basis = to_integral(s);
  return out;
}

// Squared column-norm bound max{1, k/4} * max_j ||B_j||^2 for k columns of B.
inline Rational reduced_norm_bound_sq(const IntMatrix& b) {
  Int worst = 0;
  for (std::size_t j = 0; j < b.cols(); ++j) worst = std::max(worst, squared_norm(b.col(j)));
  const Rational factor = b.cols() > 4 ? Rational(b.cols(), 4) : Rational(1);
  return factor * Rational(worst);
}

}  // namespace latbasis
