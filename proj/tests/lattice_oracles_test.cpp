#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latbasis/lattice_oracles.hpp"
#include "test_support.hpp"

namespace latbasis {
namespace {

using testing::laplace_det;

const IntMatrix kB = IntMatrix::from_rows({{6, 1}, {3, 3}});

TEST(Parallelepiped, Examples) {
  EXPECT_EQ(enumerate_parallelepiped(kB).count, 15);
  EXPECT_EQ(enumerate_parallelepiped(IntMatrix::identity(2)).count, 1);

  const auto seg = enumerate_parallelepiped(IntMatrix::from_rows({{6}, {3}}));
  ASSERT_EQ(seg.count, 3);
  std::set<std::pair<int, int>> got;
  for (const auto& p : seg.points) got.insert({p[0].convert_to<int>(), p[1].convert_to<int>()});
  EXPECT_EQ(got, (std::set<std::pair<int, int>>{{0, 0}, {2, 1}, {4, 2}}));
}

TEST(Parallelepiped, RejectsDependentAndHugeBoxes) {
  EXPECT_THROW(enumerate_parallelepiped(IntMatrix::from_rows({{1, 2}, {2, 4}})), RankDeficient);
  EXPECT_THROW(enumerate_parallelepiped(IntMatrix::from_rows({{1000, 0}, {0, 1000}}), 1000), TooLarge);
}

// Point count of a full-rank square cell equals |det|.
TEST(Parallelepiped, CountIsDeterminant) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = 1 + rng() % 3;
    const IntMatrix b = testing::random_nonsingular(rng, d, -5, 5);
    ASSERT_EQ(enumerate_parallelepiped(b).count, abs_int(laplace_det(b)));
  }
}

TEST(Fractionality, Examples) {
  EXPECT_EQ(fractionality_bruteforce(kB, 1), 5);
  EXPECT_EQ(fractionality_bruteforce(kB, 0), 15);
  EXPECT_EQ(fractionality_bruteforce(IntMatrix::identity(3), 2), 1);
  EXPECT_THROW(fractionality_bruteforce(kB, 2), DimensionMismatch);
}

// Last-coordinate fractionalities of the nested prefixes multiply to |det|.
TEST(Fractionality, MultiplicativeAcrossPrefixes) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = 2 + rng() % 2;
    const IntMatrix b = testing::random_nonsingular(rng, d, -4, 4);
    Int prod = 1;
    for (std::size_t j = 1; j <= d; ++j) {
      std::vector<std::size_t> cols(j);
      for (std::size_t c = 0; c < j; ++c) cols[c] = c;
      prod *= fractionality_bruteforce(b.select_columns(cols), j - 1);
    }
    ASSERT_EQ(prod, abs_int(laplace_det(b))) << to_string(b);
  }
}

TEST(MinorGcd, Examples) {
  EXPECT_EQ(lattice_det_minor_gcd(testing::worked_instance()), 1);
  EXPECT_EQ(lattice_det_minor_gcd(IntMatrix::from_rows({{12, 18}})), 6);
  IntMatrix two = IntMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) two(i, i) = 2;
  EXPECT_EQ(lattice_det_minor_gcd(two), 8);
  EXPECT_THROW(lattice_det_minor_gcd(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})), RankDeficient);
  EXPECT_THROW(lattice_det_minor_gcd(IntMatrix(3, 2)), RankDeficient);
}

// gcd of minors is unchanged by unimodular column operations.
TEST(MinorGcd, InvariantUnderColumnOperations) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 1 + rng() % 3;
    const IntMatrix a = testing::generate_instance_for_test(rng, d, d + rng() % 4, d);
    const Int g = lattice_det_minor_gcd(a);
    IntMatrix b = a;
    for (int op = 0; op < 6; ++op) {
      const std::size_t p = rng() % b.cols();
      const std::size_t q = rng() % b.cols();
      if (p == q) continue;
      const Int f = uniform(rng, -3, 3);
      for (std::size_t r = 0; r < d; ++r) b(r, p) += f * b(r, q);
    }
    ASSERT_EQ(lattice_det_minor_gcd(b), g);
  }
}

TEST(IsBasisOf, Examples) {
  const IntMatrix a = testing::worked_instance();
  EXPECT_TRUE(is_basis_of(IntMatrix::identity(2), a).is_basis);

  const auto rep = is_basis_of(IntMatrix::from_rows({{6, 1}, {3, 5}}), a);
  EXPECT_FALSE(rep.is_basis);
  EXPECT_FALSE(rep.membership_ok);
  EXPECT_EQ(rep.det_s, 27);

  // Sublattice that contains every generator of a coarser A: membership holds, det does not.
  const IntMatrix a2 = IntMatrix::from_rows({{2, 0, 4}, {0, 2, 2}});
  const auto sub = is_basis_of(IntMatrix::from_rows({{1, 0}, {0, 1}}), a2);
  EXPECT_TRUE(sub.membership_ok);
  EXPECT_TRUE(sub.det_checked);
  EXPECT_FALSE(sub.det_ok);
  EXPECT_FALSE(sub.is_basis);

  const auto only = is_basis_of(IntMatrix::identity(2), a2, true);
  EXPECT_FALSE(only.det_checked);
  EXPECT_TRUE(only.is_basis);
  EXPECT_EQ(only.message, "membership-only");

  EXPECT_THROW(is_basis_of(IntMatrix::from_rows({{1, 2}, {2, 4}}), a), SingularMatrix);
}

TEST(IsBasisOf, AgreesWithCramerMembership) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 80; ++i) {
    const std::size_t d = 1 + rng() % 3;
    const IntMatrix a = testing::generate_instance_for_test(rng, d, d + 1 + rng() % 3, d);
    const IntMatrix s = testing::random_nonsingular(rng, d, -3, 3);
    const auto rep = is_basis_of(s, a);
    ASSERT_EQ(rep.membership_ok, testing::columns_in_lattice(s, a));
    ASSERT_EQ(rep.is_basis, rep.membership_ok && abs_int(laplace_det(s)) == lattice_det_minor_gcd(a));
  }
}

TEST(IsBasisOfAnyRank, Examples) {
  const IntMatrix a = IntMatrix::from_rows({{4, 4, 2}, {6, 6, 3}, {8, 8, 4}});
  EXPECT_TRUE(is_basis_of_any_rank(IntMatrix::from_rows({{2}, {3}, {4}}), a).is_basis);

  const auto doubled = is_basis_of_any_rank(IntMatrix::from_rows({{4}, {6}, {8}}), a);
  EXPECT_FALSE(doubled.membership_ok);
  EXPECT_EQ(doubled.failing_columns, (std::vector<std::size_t>{2}));

  // Agrees on the projected rows but not on the last one.
  const auto skew = is_basis_of_any_rank(IntMatrix::from_rows({{2}, {3}, {5}}), a);
  EXPECT_FALSE(skew.is_basis);

  // Half of the lattice generated by A.
  const auto finer = is_basis_of_any_rank(IntMatrix::from_rows({{1}, {0}, {0}}), IntMatrix::from_rows({{2}, {0}, {0}}));
  EXPECT_TRUE(finer.membership_ok);
  EXPECT_FALSE(finer.det_ok);

  EXPECT_TRUE(is_basis_of_any_rank(IntMatrix(2, 0), IntMatrix(2, 3)).is_basis);
  EXPECT_FALSE(is_basis_of_any_rank(IntMatrix(2, 0), IntMatrix::identity(2)).is_basis);
  EXPECT_THROW(is_basis_of_any_rank(IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 0}}), a.select_rows(std::vector<std::size_t>{0, 1})),
               DimensionMismatch);
}

}  // namespace
}  // namespace latbasis
