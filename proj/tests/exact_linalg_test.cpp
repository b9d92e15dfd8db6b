#include <gtest/gtest.h>

#include <random>

#include "latbasis/exact_linalg.hpp"
#include "test_support.hpp"

namespace latbasis {
namespace {

using testing::laplace_det;

TEST(Det, Examples) {
  EXPECT_EQ(det(IntMatrix::from_rows({{6, 1}, {3, 3}})), 15);
  EXPECT_EQ(det(IntMatrix::from_rows({{6, 1}, {3, 5}})), 27);
  EXPECT_EQ(det(IntMatrix::identity(5)), 1);
  EXPECT_EQ(det(IntMatrix::from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(det(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_THROW(det(IntMatrix(2, 3)), DimensionMismatch);
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    if (rng() % 4 == 0) m(0, 0) = 0;  // force pivoting
    ASSERT_EQ(det(m), laplace_det(m));
  }
}

TEST(SolveExact, Examples) {
  const IntMatrix b = IntMatrix::from_rows({{6, 1}, {3, 5}});
  const RatMatrix x = solve_exact(b, IntMatrix::from_rows({{2}, {4}}));
  EXPECT_EQ(x(0, 0), Rational(2, 9));
  EXPECT_EQ(x(1, 0), Rational(2, 3));

  const IntMatrix c = IntMatrix::from_rows({{3, -1}, {7, 2}});
  EXPECT_EQ(solve_exact(IntMatrix::identity(2), c), to_rational(c));

  const RatMatrix h = solve_exact(IntMatrix::from_rows({{2, 0}, {0, 2}}), IntMatrix::from_rows({{1}, {1}}));
  EXPECT_EQ(h(0, 0), Rational(1, 2));
  EXPECT_EQ(h(1, 0), Rational(1, 2));

  EXPECT_THROW(solve_exact(IntMatrix::from_rows({{1, 2}, {2, 4}}), IntMatrix::from_rows({{1}, {1}})), SingularMatrix);
  EXPECT_THROW(solve_exact(b, IntMatrix(3, 1)), DimensionMismatch);
}

TEST(SolveExact, ResidualAndDenominatorsOnRandomSystems) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix b = testing::random_nonsingular(rng, n, -20, 20);
    const IntMatrix c = random_matrix(rng, n, 1 + rng() % 4, -50, 50);
    const RatMatrix x = solve_exact(b, c);
    ASSERT_EQ(mul(b, x), to_rational(c));
    const Int d = abs_int(laplace_det(b));
    for (const Rational& q : x.data()) ASSERT_EQ(d % den(q), 0);
    for (std::size_t j = 0; j < c.cols(); ++j) ASSERT_EQ(x.col_vector(j), testing::cramer_solve(b, c.col_vector(j)));
  }
}

TEST(IndependentColumns, Examples) {
  EXPECT_EQ(find_independent_columns(IntMatrix::from_rows({{1, 2, 0}, {0, 0, 1}})), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(find_independent_columns(IntMatrix::identity(3)), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(find_independent_columns(IntMatrix(3, 4)).empty());
  EXPECT_EQ(find_independent_rows(IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 1}})), (std::vector<std::size_t>{0, 2}));
}

TEST(IndependentColumns, MaximalOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const std::size_t d = 1 + rng() % 5;
    const std::size_t n = d + rng() % 5;
    const std::size_t k = rng() % (d + 1);
    const IntMatrix a = testing::generate_instance_for_test(rng, d, n, k);
    const auto idx = find_independent_columns(a);
    ASSERT_EQ(idx.size(), k);
    // Maximality: adding any excluded column keeps the rank.
    for (std::size_t c = 0; c < n; ++c) {
      if (std::find(idx.begin(), idx.end(), c) != idx.end()) continue;
      std::vector<std::size_t> ext = idx;
      ext.push_back(c);
      ASSERT_EQ(find_independent_columns(a.select_columns(ext)).size(), k);
    }
    if (k == d) {
      ASSERT_NE(laplace_det(a.select_columns(idx)), 0);
    }
    const auto rows = find_independent_rows(a);
    ASSERT_EQ(rows.size(), k);
  }
}

TEST(IndependentColumns, Random4x7FullRank) {
  std::mt19937_64 rng(29);
  const IntMatrix a = random_matrix(rng, 4, 7, -9, 9);
  const auto idx = find_independent_columns(a);
  ASSERT_EQ(idx.size(), 4u);
  EXPECT_NE(laplace_det(a.select_columns(idx)), 0);
}

TEST(Matmul, NaiveExamples) {
  const IntMatrix n = IntMatrix::from_rows({{1, -2, 3}, {4, 5, -6}});
  EXPECT_EQ(naive_matmul(IntMatrix::identity(2), n), n);
  EXPECT_EQ(naive_matmul(IntMatrix::from_rows({{3}}), IntMatrix::from_rows({{-4}})), IntMatrix::from_rows({{-12}}));
  // [[1,2],[3,4]] * [[5,6],[7,8]] = [[19,22],[43,50]], by hand.
  EXPECT_EQ(naive_matmul(IntMatrix::from_rows({{1, 2}, {3, 4}}), IntMatrix::from_rows({{5, 6}, {7, 8}})),
            IntMatrix::from_rows({{19, 22}, {43, 50}}));
  EXPECT_THROW(naive_matmul(IntMatrix(2, 3), IntMatrix(2, 3)), DimensionMismatch);
}

TEST(Matmul, XadicIdentityAndMixedSigns) {
  std::mt19937_64 rng(31);
  const IntMatrix n = testing::random_big_matrix(rng, 4, 3, 200);
  EXPECT_EQ(xadic_matmul(IntMatrix::identity(4), n), n);

  const IntMatrix m = IntMatrix::from_rows({{3, -5}, {-7, 2}});
  const IntMatrix nn = IntMatrix::from_rows({{-100, 33}, {41, -9}});
  EXPECT_EQ(xadic_matmul(m, nn), testing::schoolbook(m, nn));
  EXPECT_THROW(xadic_matmul(IntMatrix(2, 2), IntMatrix(3, 1)), DimensionMismatch);
}

TEST(Matmul, XadicMatchesSchoolbookOnHugeEntries) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const IntMatrix m = testing::random_big_matrix(rng, 5, 5, 1 + rng() % 300);
    const IntMatrix n = testing::random_big_matrix(rng, 5, 3, 256);
    for (std::size_t k = 1; k <= 2; ++k) ASSERT_EQ(xadic_matmul(m, n, k), testing::schoolbook(m, n));
  }
}

TEST(Matmul, XadicSkipsZeroDigitColumns) {
  // Column 0 has a single digit, column 1 is zero, column 2 has three digits with a zero middle digit.
  const IntMatrix m = IntMatrix::from_rows({{3, 1}, {2, 2}});  // ||M|| = 3, X = 4
  IntMatrix n(2, 3);
  n(0, 0) = 1;
  n(0, 2) = Int(1) + (Int(1) << 4);  // digits 1, 0, 1 in base 4
  XadicStats stats;
  EXPECT_EQ(xadic_matmul(m, n, 1, &stats), testing::schoolbook(m, n));
  EXPECT_EQ(stats.digit_bits, 2u);
  EXPECT_EQ(stats.skipped_columns, 2u);  // middle digit of column 2, once per product with M+ and M-
  EXPECT_EQ(stats.digit_columns, 6u);    // (1 + 2) nonzero digit columns against each of M+ and M-
}

}  // namespace
}  // namespace latbasis
