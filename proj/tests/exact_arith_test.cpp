#include <gtest/gtest.h>

#include <random>

#include "latbasis/exact_arith.hpp"
#include "test_support.hpp"

namespace latbasis {
namespace {

TEST(ExtGcd, KnownPairs) {
  auto r = ext_gcd(9, 6);
  EXPECT_EQ(r.g, 3);
  EXPECT_EQ(r.alpha * 9 + r.beta * 6, 3);

  r = ext_gcd(12, 18);
  EXPECT_EQ(r.g, 6);
  EXPECT_EQ(r.alpha * 12 + r.beta * 18, 6);

  r = ext_gcd(0, 0);
  EXPECT_EQ(r.g, 0);
  EXPECT_EQ(r.alpha, 0);
  EXPECT_EQ(r.beta, 0);
}

TEST(ExtGcd, SignsAndZeros) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 7}, {0, -7}, {-7, 0}, {-9, 6}, {9, -6}, {-4, -10}, {5, 5}}) {
    auto r = ext_gcd(a, b);
    EXPECT_GE(r.g, 0);
    EXPECT_EQ(r.alpha * a + r.beta * b, r.g) << a << "," << b;
    EXPECT_EQ(r.g, boost::multiprecision::gcd(Int(a), Int(b)));
  }
}

TEST(ExtGcd, DivisorKeepsFirstCoefficient) {
  auto r = ext_gcd(3, 12);
  EXPECT_EQ(r.g, 3);
  EXPECT_EQ(r.alpha, 1);
  EXPECT_EQ(r.beta, 0);
}

TEST(ExtGcd, RandomIdentity256Bits) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const Int a = testing::random_int(rng, 1 + rng() % 256);
    const Int b = testing::random_int(rng, 1 + rng() % 256);
    auto r = ext_gcd(a, b);
    ASSERT_EQ(r.alpha * a + r.beta * b, r.g);
    ASSERT_GE(r.g, 0);
    if (r.g != 0) {
      ASSERT_EQ(a % r.g, 0);
      ASSERT_EQ(b % r.g, 0);
    } else {
      ASSERT_TRUE(a == 0 && b == 0);
    }
  }
}

TEST(GcdLcm, Examples) {
  EXPECT_EQ(gcd_many({9, 6, 4}), 1);
  EXPECT_EQ(gcd_many({15}), 15);
  EXPECT_EQ(gcd_many({0, 0}), 0);
  EXPECT_EQ(gcd_many({-12, 18}), 6);
  EXPECT_EQ(lcm_many({3, 9}), 9);
  EXPECT_EQ(lcm_many({1, 1, 1}), 1);
  EXPECT_EQ(lcm_many({4, 6}), 12);
  EXPECT_EQ(lcm_many({-4, 6}), 12);
  EXPECT_THROW(lcm_many({3, 0}), DivisionByZero);
}

TEST(AlteredMod1, Examples) {
  EXPECT_EQ(altered_mod1(Rational(7, 3)), Rational(1, 3));
  EXPECT_EQ(altered_mod1(Rational(5)), Rational(1));
  EXPECT_EQ(altered_mod1(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(altered_mod1(Rational(0)), Rational(0));
  EXPECT_EQ(altered_mod1(Rational(-3)), Rational(1));
}

TEST(AlteredMod1, RangeAndIntegralShift) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational q(testing::random_int(rng, 40), testing::random_int(rng, 20, false) + 1);
    const Rational m = altered_mod1(q);
    ASSERT_GE(m, 0);
    ASSERT_LE(m, 1);
    if (!(is_integral(q) && q != 0)) ASSERT_TRUE(is_integral(q - m));
    else ASSERT_EQ(m, 1);
  }
}

TEST(Rounding, FloorAndNearest) {
  EXPECT_EQ(floor_q(Rational(-1, 4)), -1);
  EXPECT_EQ(floor_q(Rational(7, 3)), 2);
  EXPECT_EQ(nearest_q(Rational(1, 2)), 1);
  EXPECT_EQ(nearest_q(Rational(-1, 2)), 0);
  EXPECT_EQ(nearest_q(Rational(5, 3)), 2);
  EXPECT_EQ(nearest_q(Rational(-5, 3)), -2);
  EXPECT_EQ(frac_part(Rational(-7, 3)), Rational(2, 3));
}

TEST(RationalArithmetic, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(3);
  auto draw = [&] { return Rational(testing::random_int(rng, 90), testing::random_int(rng, 60, false) + 1); };
  for (int i = 0; i < 1000; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    const Rational s = a * b + c;
    ASSERT_GT(den(s), 0);
    ASSERT_EQ(boost::multiprecision::gcd(abs_int(num(s)), den(s)), 1);
  }
}

TEST(Int, HundredsOfDigitsRoundTrip) {
  const std::string digits(300, '7');
  const Int v = parse_int("-" + digits);
  EXPECT_EQ(v.str(), "-" + digits);
  EXPECT_EQ(parse_int("0012"), 12);
  EXPECT_EQ(parse_int("-0"), 0);
  EXPECT_EQ(parse_int("-0").str(), "0");
  EXPECT_THROW(parse_int("12a"), ParseError);
  EXPECT_THROW(parse_int("-"), ParseError);
}

}  // namespace
}  // namespace latbasis
