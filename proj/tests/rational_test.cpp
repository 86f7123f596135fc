#include "hybrid/rational.hpp"

#include <random>

#include "gtest/gtest.h"

#include "oracle.hpp"

namespace hybrid {
namespace {

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1) / Rational(1), Rational(1));
  EXPECT_EQ(Rational(-3, 4) * Rational(2, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), ArithmeticError);
  EXPECT_THROW(Rational(0).reciprocal(), ArithmeticError);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), ArithmeticError);
  EXPECT_THROW((void)Rational(0).pow(-1), ArithmeticError);
}

TEST(RationalTest, StoredReducedWithPositiveDenominator) {
  const Rational r(Integer(6), Integer(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  const Rational zero(Integer(0), Integer(-7));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("5/1"), Rational(5));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Rational(7).to_string(), "7");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(RationalTest, ParseRejectsMalformed) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "x", "1.5", "1/2/3", " 1"}) {
    EXPECT_THROW((void)Rational::parse(bad), ParseError) << bad;
  }
}

TEST(RationalTest, Pow) {
  EXPECT_EQ(Rational(-2).pow(3), Rational(-8));
  EXPECT_EQ(Rational(-2).pow(-3), Rational(-1, 8));
  EXPECT_EQ(Rational(2, 3).pow(0), Rational(1));
}

TEST(RationalTest, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational u = oracle::random_rational(rng);
    const Rational v = oracle::random_rational(rng);
    const Rational w = oracle::random_rational(rng);
    EXPECT_EQ(u * (v + w), u * v + u * w);
    EXPECT_EQ((u + v) - v, u);
    if (!v.is_zero()) {
      EXPECT_EQ((u / v) * v, u);
    }
    EXPECT_EQ(Rational::parse(u.to_string()), u);
  }
}

}  // namespace
}  // namespace hybrid
