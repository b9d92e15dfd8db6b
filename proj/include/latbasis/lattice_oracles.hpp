#pragma once

// Brute-force ground truth for small instances. Nothing here shares code with
// the basis algorithms beyond the exact solver and determinant.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

struct ParallelepipedCensus {
  IntMatrix basis;
  std::vector<IntVector> points;
  Int count = 0;
};

namespace detail {

// Coordinates x in [0,1)^j of every integer point of the half-open cell of bp.
// The box is taken over a maximal set of independent rows; the remaining rows
// of bp * x must come out integral.
template <typename Visit>
void for_each_cell_point(const IntMatrix& bp, std::size_t cap, Visit&& visit) {
  const std::size_t d = bp.rows();
  const std::size_t j = bp.cols();
  if (rank(bp) != j) throw RankDeficient("parallelepiped generators are dependent");
  if (j == 0) {
    visit(IntVector(d, Int(0)), RatVector{});
    return;
  }
  const std::vector<std::size_t> rows = find_independent_rows(bp);
  const IntMatrix square = bp.select_rows(rows);

  // adj = D * square^{-1} with D = |det(square)| > 0, so x = adj * p / D.
  Int d_abs = abs_int(det(square));
  RatMatrix inv = solve_exact(square, IntMatrix::identity(j));
  IntMatrix adj(j, j);
  for (std::size_t c = 0; c < j; ++c)
    for (std::size_t r = 0; r < j; ++r) adj(r, c) = num(inv(r, c) * Rational(d_abs));

  std::vector<Int> lo(j), hi(j);
  Int volume = 1;
  for (std::size_t r = 0; r < j; ++r) {
    for (std::size_t c = 0; c < j; ++c) {
      if (square(r, c) < 0) lo[r] += square(r, c);
      else hi[r] += square(r, c);
    }
    volume *= (hi[r] - lo[r] + 1);
    if (volume > cap) throw TooLarge("bounding box exceeds " + std::to_string(cap) + " candidates");
  }

  IntVector p = lo;
  IntVector y(j);
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < j && inside; ++r) {
      y[r] = 0;
      for (std::size_t c = 0; c < j; ++c) y[r] += adj(r, c) * p[c];
      inside = y[r] >= 0 && y[r] < d_abs;
    }
    if (inside) {
      RatVector x(j);
      for (std::size_t r = 0; r < j; ++r) x[r] = Rational(y[r], d_abs);
      RatVector full = mul(bp, x);
      bool integral = true;
      for (const Rational& q : full) integral = integral && is_integral(q);
      if (integral) {
        IntVector point(d);
        for (std::size_t r = 0; r < d; ++r) point[r] = num(full[r]);
        visit(point, x);
      }
    }
    std::size_t k = 0;
    while (k < j) {
      if (p[k] < hi[k]) {
        ++p[k];
        break;
      }
      p[k] = lo[k];
      ++k;
    }
    if (k == j) break;
  }
}

}  // namespace detail

// All integer points of {bp x : x in [0,1)^j}, via a bounding box and an exact
// membership test.
inline ParallelepipedCensus enumerate_parallelepiped(const IntMatrix& bp, std::size_t cap = kDefaultEnumerationCap) {
  ParallelepipedCensus census{bp, {}, 0};
  detail::for_each_cell_point(bp, cap, [&](const IntVector& p, const RatVector&) {
    census.points.push_back(p);
    ++census.count;
  });
  return census;
}

// lcm of the reduced denominators of coordinate i over all points of the cell.
inline Int fractionality_bruteforce(const IntMatrix& bp, std::size_t i, std::size_t cap = kDefaultEnumerationCap) {
  if (i >= bp.cols()) throw DimensionMismatch("fractionality index out of range");
  Int l = 1;
  detail::for_each_cell_point(bp, cap, [&](const IntVector&, const RatVector& x) {
    const Int z = den(x[i]);
    l = l / boost::multiprecision::gcd(l, z) * z;
  });
  return l;
}

inline constexpr std::size_t kDefaultMinorCap = 200000;

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// gcd of |det| over every d x d column subset of a.
inline Int lattice_det_minor_gcd(const IntMatrix& a, std::size_t cap = kDefaultMinorCap) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (n < d) throw RankDeficient("fewer generators than rows");
  if (binomial(n, d) > cap) throw TooLarge("too many maximal minors");
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  Int g = 0;
  while (true) {
    g = boost::multiprecision::gcd(g, abs_int(det(a.select_columns(pick))));
    if (g == 1) break;
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < d; ++k) pick[k] = pick[k - 1] + 1;
  }
  if (g == 0) throw RankDeficient("every maximal minor vanishes");
  return g;
}

struct BasisReport {
  bool is_basis = false;
  bool membership_ok = false;           // every column of A solves integrally over S
  bool det_checked = false;             // false when the minor enumeration was skipped
  bool det_ok = false;
  Int det_s = 0;
  Int det_lattice = 0;
  std::vector<std::size_t> failing_columns;
  std::string message;
};

// L(S) == L(A) for square nonsingular S and full row rank A: every A column is
// an integral combination of S, and |det S| equals the minor gcd of A.
// With membership_only, or when A has too many minors, only the first
// condition is tested and is_basis reflects it alone.
inline BasisReport is_basis_of(const IntMatrix& s, const IntMatrix& a, bool membership_only = false,
                               std::size_t minor_cap = kDefaultMinorCap) {
  if (!s.square() || s.rows() != a.rows()) throw DimensionMismatch("is_basis_of shapes");
  BasisReport rep;
  rep.det_s = abs_int(det(s));
  if (rep.det_s == 0) throw SingularMatrix("candidate basis");
  const RatMatrix coords = solve_exact(s, a);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (!is_integral(coords(r, c))) {
        rep.failing_columns.push_back(c);
        break;
      }
    }
  }
  rep.membership_ok = rep.failing_columns.empty();
  if (!membership_only && binomial(a.cols(), a.rows()) <= minor_cap) {
    rep.det_lattice = lattice_det_minor_gcd(a, minor_cap);
    rep.det_checked = true;
    rep.det_ok = rep.det_lattice == rep.det_s;
  }
  rep.is_basis = rep.membership_ok && (!rep.det_checked || rep.det_ok);
  if (!rep.membership_ok) {
    rep.message = std::to_string(rep.failing_columns.size()) + " generator(s) not in L(S)";
  } else if (rep.det_checked && !rep.det_ok) {
    rep.message = "|det S| = " + rep.det_s.str() + " but lattice determinant is " + rep.det_lattice.str();
  } else {
    rep.message = rep.det_checked ? "basis" : "membership-only";
  }
  return rep;
}

// Same check for a d x k candidate of independent columns, k <= d. Both
// matrices are projected onto k rows that are independent for S; membership
// additionally requires the projected coordinates to reproduce every row of A.
inline BasisReport is_basis_of_any_rank(const IntMatrix& s, const IntMatrix& a, bool membership_only = false,
                                        std::size_t minor_cap = kDefaultMinorCap) {
  if (s.rows() != a.rows()) throw DimensionMismatch("is_basis_of shapes");
  if (s.square()) return is_basis_of(s, a, membership_only, minor_cap);
  const std::vector<std::size_t> rows = find_independent_rows(s);
  if (rows.size() != s.cols()) throw SingularMatrix("candidate basis columns are dependent");

  BasisReport rep;
  if (s.cols() == 0) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (max_norm(a.col(c)) != 0) rep.failing_columns.push_back(c);
    rep.membership_ok = rep.failing_columns.empty();
    rep.det_s = 1;
    rep.det_lattice = 1;
    rep.det_checked = true;
    rep.det_ok = true;
    rep.is_basis = rep.membership_ok;
    rep.message = rep.is_basis ? "basis" : std::to_string(rep.failing_columns.size()) + " generator(s) not in L(S)";
    return rep;
  }

  const IntMatrix s_hat = s.select_rows(rows);
  const IntMatrix a_hat = a.select_rows(rows);
  rep = is_basis_of(s_hat, a_hat, true);
  const RatMatrix coords = solve_exact(s_hat, a_hat);
  const RatMatrix lifted = mul(s, coords);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) ok = lifted(r, c) == Rational(a(r, c));
    if (!ok && std::find(rep.failing_columns.begin(), rep.failing_columns.end(), c) == rep.failing_columns.end())
      rep.failing_columns.push_back(c);
  }
  std::sort(rep.failing_columns.begin(), rep.failing_columns.end());
  rep.membership_ok = rep.failing_columns.empty();
  if (rep.membership_ok && !membership_only && binomial(a_hat.cols(), a_hat.rows()) <= minor_cap) {
    rep.det_checked = true;
    try {
      rep.det_lattice = lattice_det_minor_gcd(a_hat, minor_cap);
      rep.det_ok = rep.det_lattice == rep.det_s;
    } catch (const RankDeficient&) {
      rep.det_ok = false;  // A spans less than S
    }
  }
  rep.is_basis = rep.membership_ok && (!rep.det_checked || rep.det_ok);
  if (!rep.membership_ok) {
    rep.message = std::to_string(rep.failing_columns.size()) + " generator(s) not in L(S)";
  } else if (rep.det_checked && !rep.det_ok) {
    rep.message = "|det S| = " + rep.det_s.str() + " on the projection but lattice determinant is " +
                  rep.det_lattice.str();
  } else {
    rep.message = rep.det_checked ? "basis" : "membership-only";
  }
  return rep;
}

}  // namespace latbasis
