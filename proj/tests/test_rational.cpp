#include <gtest/gtest.h>

#include <random>

#include "tori/rational.hpp"

using tori::Rational;

TEST(Rational, NormalisesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("x"), tori::ParameterError);
  EXPECT_THROW(Rational(1, 0), tori::InternalError);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int it = 0; it < 2000; ++it) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(a < b, !(a >= b));
  }
}
