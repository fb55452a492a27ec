#include <gtest/gtest.h>

#include <limits>
#include <sstream>
#include <stdexcept>

#include "aeg/errors.hpp"
#include "aeg/rational.hpp"

namespace aeg {
namespace {

TEST(Rational, NormalizesSignAndTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7).den(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(5, 7), Rational(-5, 7));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, ParsesAndPrintsReducedForm) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("1/1").str(), "1/1");
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_EQ(Rational(10, -4).str(), "-5/2");
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("x"), InputError);
  EXPECT_THROW(Rational::parse("1/"), InputError);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(big * Rational(2), std::overflow_error);
  // Large intermediates that reduce back into range are fine.
  EXPECT_EQ(Rational(big.num(), 3) * Rational(3, big.num()), Rational(1));
}

TEST(ExtendedRational, OrdersInfinitiesAroundFiniteValues) {
  const auto lo = ExtendedRational::neg_inf();
  const auto hi = ExtendedRational::pos_inf();
  EXPECT_LT(lo, ExtendedRational(Rational(-1000)));
  EXPECT_LT(ExtendedRational(Rational(1000)), hi);
  EXPECT_EQ(-hi, lo);
  EXPECT_EQ(hi + Rational(5), hi);
  EXPECT_EQ(ExtendedRational(Rational(1, 2)) + Rational(1, 2), ExtendedRational(1));
  EXPECT_EQ(hi.str(), "inf");
  EXPECT_EQ(lo.str(), "-inf");
  std::ostringstream os;
  os << ExtendedRational(Rational(-3, 6));
  EXPECT_EQ(os.str(), "-1/2");
}

}  // namespace
}  // namespace aeg
