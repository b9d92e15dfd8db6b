#pragma once

// Reference multi-dimensional Euclidean algorithm: repeated modulo and
// exchange steps on an initial basis chosen from the generators. Slow but
// simple; the fast variant is checked against it.

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

struct ExchangeStep {
  IntVector c;                   // vector taken from the pending set
  RatVector x;                   // B x = c
  std::optional<std::size_t> pivot;
  Int det_before = 0;            // |det B| before the step
  Int det_after = 0;             // |det B| after the step (unchanged when c was integral)
  IntVector residue;             // new column B_pivot, empty when nothing was exchanged
};

struct ExchangeTrace {
  Int initial_det = 0;
  std::vector<ExchangeStep> steps;
  std::size_t exchanges = 0;
};

struct BasicResult {
  IntMatrix basis;
  std::vector<std::size_t> initial_columns;
  ExchangeTrace trace;
};

// Called after every step with the current basis and the pending vectors.
using BasicObserver = std::function<void(const IntMatrix& basis, const std::deque<IntVector>& pending)>;

// Smallest index with a fractional coordinate.
inline std::optional<std::size_t> choose_fractional_index(std::span<const Rational> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_integral(x[i])) return i;
  return std::nullopt;
}

// c - (B_l * round(x_l) + sum_{j != l} B_j * floor(x_j)), rounding to nearest
// on the pivot so that |det| at least halves after the exchange.
inline IntVector modprime_residue(const IntMatrix& b, std::span<const Int> c, std::span<const Rational> x,
                                  std::size_t pivot) {
  IntVector r(c.begin(), c.end());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const Int k = j == pivot ? nearest_q(x[j]) : floor_q(x[j]);
    if (k == 0) continue;
    for (std::size_t i = 0; i < b.rows(); ++i) r[i] -= b(i, j) * k;
  }
  return r;
}

inline BasicResult basic_basis(const IntMatrix& a, const BasicObserver& observe = {}) {
  const std::size_t d = a.rows();
  BasicResult res;
  res.initial_columns = find_independent_columns(a);
  if (res.initial_columns.size() < d)
    throw RankDeficient("rank " + std::to_string(res.initial_columns.size()) + " < " + std::to_string(d) +
                        " rows; use lowrank_basis");

  IntMatrix b = a.select_columns(res.initial_columns);
  std::deque<IntVector> pending;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (k < res.initial_columns.size() && res.initial_columns[k] == c) {
        ++k;
        continue;
      }
      pending.push_back(a.col_vector(c));
    }
  }

  Int cur_det = abs_int(det(b));
  res.trace.initial_det = cur_det;
  if (observe) observe(b, pending);

  while (!pending.empty()) {
    ExchangeStep step;
    step.c = std::move(pending.front());
    pending.pop_front();
    step.x = solve_exact(b, std::span<const Int>(step.c));
    step.det_before = cur_det;
    step.pivot = choose_fractional_index(step.x);
    if (step.pivot) {
      const std::size_t l = *step.pivot;
      step.residue = modprime_residue(b, step.c, step.x, l);
      // Coordinates of the residue: fractional parts off the pivot, x_l - round(x_l) on it.
      const Rational ratio = step.x[l] - Rational(nearest_q(step.x[l]));
      if (ratio < Rational(-1, 2) || ratio >= Rational(1, 2) || ratio == 0)
        throw InvariantViolation("pivot coefficient outside [-1/2, 1/2)");
      const Rational next = Rational(cur_det) * (ratio < 0 ? Rational(-ratio) : ratio);
      if (!is_integral(next)) throw InvariantViolation("exchange determinant is not integral");
      pending.push_back(b.col_vector(l));
      b.set_col(l, step.residue);
      cur_det = num(next);
      ++res.trace.exchanges;
    }
    step.det_after = cur_det;
    res.trace.steps.push_back(std::move(step));
    if (observe) observe(b, pending);
  }
  res.basis = std::move(b);
  return res;
}

}  // namespace latbasis
