#pragma once

// Fast generalized Euclidean algorithm.
//
// One pivot coordinate is eliminated per outer iteration: the pivot's
// translate t (common denominator of that coordinate over all pending
// solution vectors) and the translates t_j of the pending vectors drive an
// extended gcd chain. The chain yields one basis vector on the gcd translate
// and pushes every pending vector onto translate 0, i.e. into the span of the
// remaining basis columns. All solution entries are kept reduced modulo 1,
// so every entry stays in [0, 1].

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

struct TranslateChain {
  std::size_t pivot = 0;
  Int t = 1;                // translate of the pivot column (common denominator)
  IntVector translates;     // t_1 .. t_m
  IntVector gcds;           // g_0 = t, g_j = gcd(g_{j-1}, t_j)
  IntVector alphas;         // alpha_j g_{j-1} + beta_j t_j = g_j
  IntVector betas;
};

struct FastStats {
  std::size_t updates = 0;              // inner-loop iterations
  std::size_t entries_checked = 0;      // X/Z/Y entries verified to lie in [0,1]
  std::size_t integer_to_one = 0;       // nonzero integers folded to 1 by the mod-1 rule
  std::size_t max_denominator_bits = 0;
};

struct BasisResult {
  IntMatrix initial;                       // B: independent generators picked from A
  std::vector<std::size_t> initial_columns;
  std::vector<std::size_t> projection_rows;  // rows kept by the low-rank projection
  RatMatrix coefficients;                  // Y with S = B Y
  IntMatrix basis;                         // S
  std::vector<std::size_t> pivot_order;    // pivot coordinate of each Y column
  std::vector<TranslateChain> chains;
  FastStats stats;
  std::size_t rank = 0;
};

// lcm of the denominators in each row of x.
inline IntVector row_lcms(const RatMatrix& x) {
  IntVector out(x.rows(), Int(1));
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const Int z = den(x(r, c));
      l = l / boost::multiprecision::gcd(l, z) * z;
    }
    out[r] = l;
  }
  return out;
}

// Available row with the largest row lcm; ties go to the smallest index.
inline std::size_t choose_max_fractionality_pivot(const RatMatrix& x, const std::vector<bool>& available) {
  const IntVector l = row_lcms(x);
  std::size_t best = available.size();
  for (std::size_t r = 0; r < available.size(); ++r) {
    if (!available[r]) continue;
    if (best == available.size() || l[r] > l[best]) best = r;
  }
  if (best == available.size()) throw DimensionMismatch("no pivot available");
  return best;
}

inline TranslateChain gcd_chain(const Int& t, std::span<const Int> translates) {
  if (t < 1) throw InvariantViolation("pivot translate must be positive");
  TranslateChain chain;
  chain.t = t;
  chain.translates.assign(translates.begin(), translates.end());
  chain.gcds.push_back(t);
  for (const Int& tj : translates) {
    Bezout bz = ext_gcd(chain.gcds.back(), tj);
    chain.gcds.push_back(bz.g);
    chain.alphas.push_back(bz.alpha);
    chain.betas.push_back(bz.beta);
  }
  return chain;
}

// Translate chain of coordinate `pivot` over the columns of x: t is the row
// lcm and t_j the numerator of x(pivot, j) over t.
inline TranslateChain translate_chain(const RatMatrix& x, std::size_t pivot) {
  const Int t = row_lcms(x)[pivot];
  IntVector ts(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) ts[j] = num(x(pivot, j) * Rational(t));
  TranslateChain chain = gcd_chain(t, ts);
  chain.pivot = pivot;
  return chain;
}

// Solution of B' x' = B_l after exchanging column l of B with c (B x = c).
inline RatVector update_solution_after_exchange(std::span<const Rational> x, std::size_t l) {
  if (l >= x.size()) throw DimensionMismatch("pivot index out of range");
  if (x[l] == 0) throw DivisionByZero("x_l = 0");
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = i == l ? Rational(1) / x[l] : Rational(-x[i] / x[l]);
  return out;
}

// Y (reordered by pivot_order) is lower triangular with diagonal in {1} U {1/k}.
inline bool is_pivot_triangular(const RatMatrix& y, std::span<const std::size_t> pivot_order, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (pivot_order.size() != y.cols()) return fail("pivot order length");
  for (std::size_t i = 0; i < y.cols(); ++i) {
    for (std::size_t k = 0; k < i; ++k)
      if (y(pivot_order[k], i) != 0) return fail("nonzero above the pivot diagonal in column " + std::to_string(i));
    const Rational& diag = y(pivot_order[i], i);
    if (num(diag) != 1) return fail("diagonal entry " + to_string(diag) + " is not 1/k");
  }
  return true;
}

namespace detail {

class FastRun {
 public:
  FastRun(const IntMatrix& b, const IntMatrix& c) : k_(b.rows()), m_(c.cols()) {
    x_ = solve_exact(b, c);
    for (std::size_t j = 0; j < m_; ++j)
      for (std::size_t r = 0; r < k_; ++r) x_(r, j) = fold(x_(r, j));
    y_ = RatMatrix(k_, k_);
    available_.assign(k_, true);
  }

  void run() {
    for (std::size_t i = 0; i < k_; ++i) step(i);
  }

  RatMatrix& coefficients() { return y_; }
  std::vector<std::size_t>& pivot_order() { return order_; }
  std::vector<TranslateChain>& chains() { return chains_; }
  FastStats& stats() { return stats_; }

 private:
  Rational fold(const Rational& q) {
    if (is_integral(q) && q != 0 && q != 1) ++stats_.integer_to_one;
    Rational out = altered_mod1(q);
    check_entry(out);
    return out;
  }

  void check_entry(const Rational& q) {
    ++stats_.entries_checked;
    if (q < 0 || q > 1) throw InvariantViolation("solution entry " + to_string(q) + " outside [0,1]");
    if (den(q) <= 0 || boost::multiprecision::gcd(abs_int(num(q)), den(q)) != 1)
      throw InvariantViolation("solution entry not in lowest terms");
    stats_.max_denominator_bits = std::max(stats_.max_denominator_bits, bit_length(den(q)));
  }

  void step(std::size_t i) {
    const std::size_t l = choose_max_fractionality_pivot(x_, available_);
    TranslateChain chain = translate_chain(x_, l);

    RatVector z(k_, Rational(0));
    z[l] = 1;
    for (std::size_t j = 0; j < m_; ++j) {
      const Int& g_prev = chain.gcds[j];
      const Int& g = chain.gcds[j + 1];
      const Int& tj = chain.translates[j];
      if (g_prev % g != 0 || tj % g != 0) throw InvariantViolation("gcd chain does not divide");
      const Rational keep(g_prev / g);
      const Rational drop(tj / g);
      const Rational alpha(chain.alphas[j]);
      const Rational beta(chain.betas[j]);
      RatVector z_next(k_);
      for (std::size_t r = 0; r < k_; ++r) {
        z_next[r] = fold(alpha * z[r] + beta * x_(r, j));
        x_(r, j) = fold(keep * x_(r, j) - drop * z[r]);
      }
      z = std::move(z_next);
      ++stats_.updates;

      if (x_(l, j) != 0) throw InvariantViolation("pending vector left off translate 0");
      for (std::size_t p : order_)
        if (x_(p, j) != 0 || z[p] != 0) throw InvariantViolation("pivoted row became nonzero");
      if (z[l] != Rational(g, chain.t)) throw InvariantViolation("Z_j not on the gcd translate");
    }
    for (std::size_t r = 0; r < k_; ++r) {
      y_(r, i) = z[r];
      check_entry(z[r]);
    }
    if (num(z[l]) != 1) throw InvariantViolation("diagonal coefficient is not 1/k");
    available_[l] = false;
    order_.push_back(l);
    chains_.push_back(std::move(chain));
  }

  std::size_t k_;
  std::size_t m_;
  RatMatrix x_;
  RatMatrix y_;
  std::vector<bool> available_;
  std::vector<std::size_t> order_;
  std::vector<TranslateChain> chains_;
  FastStats stats_;
};

// S = B Y with Y cleared column by column to an integral matrix first.
inline IntMatrix multiply_basis(const IntMatrix& b, const RatMatrix& y) {
  IntMatrix scaled(y.rows(), y.cols());
  IntVector scale(y.cols());
  for (std::size_t c = 0; c < y.cols(); ++c) {
    Int l = 1;
    for (std::size_t r = 0; r < y.rows(); ++r) {
      const Int z = den(y(r, c));
      l = l / boost::multiprecision::gcd(l, z) * z;
    }
    scale[c] = l;
    for (std::size_t r = 0; r < y.rows(); ++r) scaled(r, c) = num(y(r, c) * Rational(l));
  }
  IntMatrix s = xadic_matmul(b, scaled, 1);
  for (std::size_t c = 0; c < s.cols(); ++c)
    for (std::size_t r = 0; r < s.rows(); ++r) {
      if (s(r, c) % scale[c] != 0) throw InvariantViolation("basis vector is not integral");
      s(r, c) /= scale[c];
    }
  return s;
}

inline BasisResult run_on_projection(const IntMatrix& a, std::vector<std::size_t> cols, std::vector<std::size_t> rows) {
  BasisResult res;
  res.initial_columns = std::move(cols);
  res.projection_rows = std::move(rows);
  res.rank = res.initial_columns.size();
  res.initial = a.select_columns(res.initial_columns);

  std::vector<std::size_t> rest;
  for (std::size_t c = 0, k = 0; c < a.cols(); ++c) {
    if (k < res.initial_columns.size() && res.initial_columns[k] == c) {
      ++k;
      continue;
    }
    rest.push_back(c);
  }
  const IntMatrix b_hat = res.initial.select_rows(res.projection_rows);
  const IntMatrix c_hat = a.select_columns(rest).select_rows(res.projection_rows);

  FastRun run(b_hat, c_hat);
  run.run();
  res.coefficients = std::move(run.coefficients());
  res.pivot_order = std::move(run.pivot_order());
  res.chains = std::move(run.chains());
  res.stats = run.stats();
  res.basis = multiply_basis(res.initial, res.coefficients);
  return res;
}

}  // namespace detail

// Basis S = B Y of L(A) for A of full row rank, with ||S||_inf <= d ||A||_inf.
inline BasisResult fast_basis(const IntMatrix& a) {
  std::vector<std::size_t> cols = find_independent_columns(a);
  if (cols.size() < a.rows())
    throw RankDeficient("rank " + std::to_string(cols.size()) + " < " + std::to_string(a.rows()) +
                        " rows; use lowrank_basis");
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return detail::run_on_projection(a, std::move(cols), std::move(rows));
}

// Basis of L(A) for any rank: the algorithm runs on rank(A) independent rows
// of the initial columns and the result is lifted back by S = B Y.
inline BasisResult lowrank_basis(const IntMatrix& a) {
  std::vector<std::size_t> cols = find_independent_columns(a);
  if (cols.empty()) {
    BasisResult res;
    res.initial = IntMatrix(a.rows(), 0);
    res.basis = IntMatrix(a.rows(), 0);
    return res;
  }
  std::vector<std::size_t> rows = find_independent_rows(a.select_columns(cols));
  return detail::run_on_projection(a, std::move(cols), std::move(rows));
}

}  // namespace latbasis
