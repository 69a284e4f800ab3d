#include <gtest/gtest.h>

#include <random>

#include "polyadj/integer.hpp"

using namespace polyadj;

TEST(Integer, FloorCeilModAgreeWithDefinitions) {
  for (int a = -20; a <= 20; ++a) {
    for (int b = -7; b <= 7; ++b) {
      if (b == 0) continue;
      const Integer q = floor_div(a, b);
      // q is the unique integer with q <= a/b < q + 1.
      if (b > 0) {
        EXPECT_LE(q * b, a);
        EXPECT_GT((q + 1) * b, a);
      } else {
        EXPECT_GE(q * b, a);
        EXPECT_LT((q + 1) * b, a);
      }
      const Integer c = ceil_div(a, b);
      EXPECT_EQ(c, -floor_div(-a, b));
      if (b > 0) {
        const Integer r = mod_floor(a, b);
        EXPECT_GE(r, 0);
        EXPECT_LT(r, b);
        EXPECT_EQ((a - r) % b, 0);
      }
    }
  }
}

TEST(Integer, ExtendedGcdBezout) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int k = 0; k < 2000; ++k) {
    const Integer a = dist(rng), b = dist(rng);
    const auto [g, s, t] = extended_gcd(a, b);
    EXPECT_GE(g, 0);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_EQ(g, gcd(a, b));
    if (g != 0) {
      EXPECT_EQ(a % g, 0);
      EXPECT_EQ(b % g, 0);
    }
  }
  const auto [g0, s0, t0] = extended_gcd(0, 0);
  EXPECT_EQ(g0, 0);
}

TEST(Integer, ParseAndPrintRoundTrip) {
  for (const std::string text : {"0", "-1", "12345678901234567890123456789", "-98765432109876543210"}) {
    EXPECT_EQ(to_string(parse_integer(text)), text);
  }
  EXPECT_EQ(parse_integer("+17"), 17);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
}

TEST(Integer, ToInt64Boundaries) {
  EXPECT_EQ(to_int64(Integer(INT64_MAX)), INT64_MAX);
  EXPECT_EQ(to_int64(Integer(INT64_MIN)), INT64_MIN);
  EXPECT_FALSE(to_int64(Integer(INT64_MAX) + 1).has_value());
  EXPECT_FALSE(to_int64(Integer(INT64_MIN) - 1).has_value());
}

TEST(Rational, AlwaysReduced) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).den(), 1);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, ArithmeticMatchesCrossMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int k = 0; k < 3000; ++k) {
    const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x{Integer(a), Integer(b)}, y{Integer(c), Integer(d)};
    EXPECT_EQ(x + y, Rational(Integer(a * d + c * b), Integer(b * d)));
    EXPECT_EQ(x - y, Rational(Integer(a * d - c * b), Integer(b * d)));
    EXPECT_EQ(x * y, Rational(Integer(a * c), Integer(b * d)));
    if (c != 0) {
      EXPECT_EQ(x / y, Rational(Integer(a * d), Integer(b * c)));
    }
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
    EXPECT_EQ(x.floor(), floor_div(a, b));
    EXPECT_EQ(x.sign(), (a > 0) - (a < 0));
  }
}

TEST(Rational, StringForm) {
  EXPECT_EQ(Rational(Integer(1), Integer(3)).str(), "1/3");
  EXPECT_EQ(Rational(2).str(), "2/1");
  EXPECT_EQ(Rational(Integer(-6), Integer(4)).str(), "-3/2");
  EXPECT_EQ(Rational::parse("-3/2"), Rational(Integer(-3), Integer(2)));
  EXPECT_EQ(Rational::parse("4"), Rational(4));
  EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
  EXPECT_TRUE(Rational(Integer(4), Integer(2)).is_integer());
}
