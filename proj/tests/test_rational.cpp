#include <gtest/gtest.h>

#include <sstream>

#include "sflow/errors.hpp"
#include "sflow/rational.hpp"

using sflow::Rational;

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-4/3").to_string(), "-4/3");
  EXPECT_EQ(Rational::parse(" 10/5 ").to_string(), "2");
  EXPECT_EQ(Rational::parse("+7").to_string(), "7");
  EXPECT_EQ(Rational::parse("0/9").to_string(), "0");
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1.5", "1e3", "1/0", "a", "1//2", "/2", "3/", "- 1", "4/-6"}) {
    EXPECT_THROW(Rational::parse(bad), sflow::parse_error) << bad;
  }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), sflow::domain_error);
  EXPECT_THROW(Rational(1, 0), sflow::domain_error);
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_TRUE(Rational(-3, 2).is_half_odd());
  EXPECT_FALSE(Rational(1, 4).is_half_odd());
  EXPECT_EQ(Rational(-5, 3).sign(), -1);
  EXPECT_EQ(Rational(-5, 3).abs(), Rational(5, 3));
  EXPECT_EQ(Rational(-12, 4).to_long(), -3);
}

TEST(Rational, OrderingAndStreaming) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  std::ostringstream os;
  os << Rational(-9, 6);
  EXPECT_EQ(os.str(), "-3/2");
}
