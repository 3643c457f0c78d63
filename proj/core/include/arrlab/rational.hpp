#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arrlab {

using BigInt = mpz_class;

/// Exact rational number kept in canonical form: the denominator is positive
/// and shares no factor with the numerator. Every constructor and arithmetic
/// operator re-establishes this, so structural equality is value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);
  Rational(long numerator, long denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  /// Parses "p/q", "p" or "-p/q". Throws InputError on anything else.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Fixed-point decimal rounded half-to-even at `digits` places, computed
  /// exactly from the fraction.
  std::string to_decimal(int digits = 6) const;
  double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace arrlab
