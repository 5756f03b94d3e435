#include "probid/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "probid/error.hpp"

namespace probid {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorKind::BadTerm, "malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::BadTerm, "malformed rational '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  }
  value_ = Storage(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view body = whole;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), whole);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), whole);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

std::string Rational::str() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Storage(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow2(int exponent) {
  if (exponent >= 0) return Rational(BigInt(1) << exponent, 1);
  return Rational(1, BigInt(1) << -exponent);
}

std::int64_t ceil_log2(const Rational& r) {
  if (r.sign() <= 0) throw Error(ErrorKind::NonpositiveMass, "ceil_log2 of nonpositive value");
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  // Start from the bit-length difference and correct by at most one.
  std::int64_t c = static_cast<std::int64_t>(mp::msb(num)) - static_cast<std::int64_t>(mp::msb(den));
  auto at_least = [&](std::int64_t e) {
    // 2^e >= num/den
    return e >= 0 ? (den << e) >= num : den >= (num << -e);
  };
  while (!at_least(c)) ++c;
  while (at_least(c - 1)) --c;
  return c;
}

BigInt floor(const Rational& r) {
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num.sign() < 0 && q * den != num) q -= 1;
  return q;
}

Rational approximate(const Rational& value, const Rational& eps) {
  if (eps.sign() < 0) throw Error(ErrorKind::NonpositiveMass, "negative precision");
  if (eps.is_zero()) return value;
  const std::int64_t k = std::max<std::int64_t>(0, ceil_log2(Rational(1) / eps));
  const BigInt scale = BigInt(1) << k;
  return Rational(floor(value * Rational(scale, 1)), scale);
}

}  // namespace probid
