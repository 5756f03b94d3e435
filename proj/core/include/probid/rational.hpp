#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace probid {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p", "p/q", optionally signed, surrounding blanks ignored.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// "p/q" or "p" when q = 1; parse(str()) == *this.
  std::string str() const;
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

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  using Storage = boost::multiprecision::cpp_rational;
  explicit Rational(Storage value) : value_(std::move(value)) {}

  Storage value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// 2^exponent, exact; negative exponents allowed.
Rational pow2(int exponent);

/// Least integer c with 2^c >= r. Requires r > 0.
std::int64_t ceil_log2(const Rational& r);

/// Largest integer not above r.
BigInt floor(const Rational& r);

/// A dyadic rational within eps of value (value itself when eps is 0).
/// Implements the "approximate to any requested precision" contract used by
/// hypothesis evaluation.
Rational approximate(const Rational& value, const Rational& eps);

}  // namespace probid
