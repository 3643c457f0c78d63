#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "arrlab/errors.hpp"
#include "arrlab/rational.hpp"

using arrlab::Rational;

namespace {

// Reference fraction on machine integers, reduced with std::gcd.
struct Frac {
  long long p;
  long long q;
  Frac(long long num, long long den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    p = num / g;
    q = den / g;
  }
};

void expect_same(const Rational& x, const Frac& f) {
  EXPECT_EQ(x.numerator().get_si(), f.p);
  EXPECT_EQ(x.denominator().get_si(), f.q);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational x(6, -4);
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(Rational(0, -7).denominator(), 1);
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), arrlab::InputError); }

TEST(Rational, ArithmeticAgainstMachineFractions) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-60, 60);
  for (int iter = 0; iter < 500; ++iter) {
    long a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
    if (b == 0) b = 1;
    if (e == 0) e = -1;
    const Rational x(a, b), y(c, e);
    expect_same(x + y, Frac(a * e + c * b, b * e));
    expect_same(x - y, Frac(a * e - c * b, b * e));
    expect_same(x * y, Frac(a * c, b * e));
    if (c != 0) expect_same(x / y, Frac(a * e, b * c));
    EXPECT_EQ(x < y, static_cast<long double>(a) / b < static_cast<long double>(c) / e);
  }
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1, 2) / Rational(0), arrlab::InputError); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("26/15"), Rational(26, 15));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_THROW(Rational::parse("4/-6"), arrlab::InputError);
  EXPECT_EQ(Rational(41, 20).to_string(), "41/20");
  EXPECT_EQ(Rational(-8, 4).to_string(), "-2");
  EXPECT_THROW(Rational::parse("1/0"), arrlab::InputError);
  EXPECT_THROW(Rational::parse("abc"), arrlab::InputError);
  EXPECT_THROW(Rational::parse(""), arrlab::InputError);
  EXPECT_THROW(Rational::parse("1.5"), arrlab::InputError);
  std::ostringstream os;
  os << Rational(19, 10);
  EXPECT_EQ(os.str(), "19/10");
}

TEST(Rational, ParseRoundTrip) {
  for (long p = -20; p <= 20; ++p) {
    for (long q = 1; q <= 13; ++q) {
      const Rational x(p, q);
      EXPECT_EQ(Rational::parse(x.to_string()), x);
    }
  }
}

TEST(Rational, DecimalRoundsHalfEven) {
  EXPECT_EQ(Rational(26, 15).to_decimal(), "1.733333");
  EXPECT_EQ(Rational(19, 10).to_decimal(), "1.900000");
  EXPECT_EQ(Rational(2, 3).to_decimal(), "0.666667");
  EXPECT_EQ(Rational(-2, 3).to_decimal(), "-0.666667");
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.12");
  EXPECT_EQ(Rational(3, 8).to_decimal(2), "0.38");
  EXPECT_EQ(Rational(5, 2).to_decimal(0), "2");
  EXPECT_EQ(Rational(7, 2).to_decimal(0), "4");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.12");
  EXPECT_EQ(Rational(1, 3000000).to_decimal(), "0.000000");
  EXPECT_EQ(Rational(5).to_decimal(), "5.000000");
}

TEST(Rational, FloorCeilAbs) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).floor(), 4);
  EXPECT_EQ(Rational(-3, 5).abs(), Rational(3, 5));
  EXPECT_EQ(Rational(-3, 5).reciprocal(), Rational(-5, 3));
  EXPECT_THROW(Rational(0).reciprocal(), arrlab::InputError);
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}
