#include "probid/bracket.hpp"

#include "probid/error.hpp"

namespace probid {

namespace mp = boost::multiprecision;

namespace {

// Fixed-point reals are integers scaled by 2^kFrac. Every routine below
// rounds toward the side of the bound it produces.
constexpr unsigned kFrac = 128;

const BigInt& one() {
  static const BigInt value = BigInt(1) << kFrac;
  return value;
}

BigInt div_floor(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a.sign() < 0) != (b.sign() < 0) && q * b != a) q -= 1;
  return q;
}

BigInt div_ceil(const BigInt& a, const BigInt& b) { return -div_floor(-a, b); }

BigInt mul_floor(const BigInt& a, const BigInt& b) { return div_floor(a * b, one()); }
BigInt mul_ceil(const BigInt& a, const BigInt& b) { return div_ceil(a * b, one()); }

// ln(y) for fixed-point y in [1, 2], via ln y = 2 atanh((y-1)/(y+1)).
// With y <= 2 the series argument is at most 1/3, so each term shrinks by 9.
BigInt ln_fixed(const BigInt& y, bool upper) {
  const BigInt num = (y - one()) * one();
  const BigInt den = y + one();
  const BigInt z = upper ? div_ceil(num, den) : div_floor(num, den);
  if (z == 0) return 0;
  const BigInt z2 = upper ? mul_ceil(z, z) : mul_floor(z, z);

  BigInt sum = 0;
  BigInt power = z;  // z^(2i+1)
  for (unsigned i = 0; power > 0; ++i) {
    const BigInt odd = 2 * i + 1;
    sum += upper ? div_ceil(power, odd) : div_floor(power, odd);
    power = upper ? mul_ceil(power, z2) : mul_floor(power, z2);
    if (upper && power <= 1) {
      // Remaining tail is below power * 9/8 since 1 - z^2 >= 8/9.
      sum += div_ceil(power * 9, 8) + 1;
      break;
    }
  }
  return 2 * sum;
}

struct FixedBracket {
  BigInt lo;
  BigInt hi;
};

const FixedBracket& ln2_fixed() {
  static const FixedBracket value{ln_fixed(2 * one(), false), ln_fixed(2 * one(), true)};
  return value;
}

Rational from_fixed(const BigInt& v) { return Rational(v, one()); }

// Brackets ln(num/den) for num >= den > 0, split as k ln 2 + ln(y), y in [1, 2).
FixedBracket ln_ratio_fixed(const BigInt& num, const BigInt& den) {
  std::int64_t k = static_cast<std::int64_t>(mp::msb(num)) - static_cast<std::int64_t>(mp::msb(den));
  if (k > 0 && (den << k) > num) --k;
  if (k < 0) k = 0;
  // y = num / (den 2^k), scaled by 2^kFrac
  const BigInt scaled_num = num << kFrac;
  const BigInt scaled_den = den << k;
  const BigInt y_lo = div_floor(scaled_num, scaled_den);
  const BigInt y_hi = div_ceil(scaled_num, scaled_den);
  const FixedBracket& ln2 = ln2_fixed();
  return FixedBracket{k * ln2.lo + ln_fixed(y_lo, false),
                      k * ln2.hi + ln_fixed(std::min(y_hi, BigInt(2 * one())), true)};
}

BigInt isqrt_ceil(const BigInt& v) {
  BigInt s = mp::sqrt(v);
  if (s * s < v) s += 1;
  return s;
}

}  // namespace

Position cmp_against_bracket(const Rational& v, const Bracket& b) {
  if (v < b.lo) return Position::Below;
  if (v > b.hi) return Position::Above;
  return Position::Inside;
}

Bracket ln_bracket(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::NonpositiveMass, "ln of zero");
  const FixedBracket f = ln_ratio_fixed(BigInt(n), BigInt(1));
  return Bracket{from_fixed(f.lo), from_fixed(f.hi)};
}

Bracket tau(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "tau requires n >= 1");
  if (n == 1) return Bracket{Rational(0), Rational(0)};
  const FixedBracket ln = ln_ratio_fixed(BigInt(n), BigInt(1));
  const BigInt v_lo = div_floor(ln.lo, BigInt(n));
  const BigInt v_hi = div_ceil(ln.hi, BigInt(n));
  // sqrt(v / 2^f) * 2^f = sqrt(v * 2^f)
  const BigInt s_lo = mp::sqrt(BigInt(v_lo << kFrac));
  const BigInt s_hi = isqrt_ceil(BigInt(v_hi << kFrac));
  return Bracket{from_fixed(s_lo), from_fixed(s_hi)};
}

Bracket log2_bracket(const Rational& r) {
  if (r < Rational(1)) throw Error(ErrorKind::NonpositiveMass, "log2_bracket requires r >= 1");
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  std::int64_t k = static_cast<std::int64_t>(mp::msb(num)) - static_cast<std::int64_t>(mp::msb(den));
  if (k > 0 && (den << k) > num) --k;
  if (k < 0) k = 0;
  const BigInt scaled_num = num << kFrac;
  const BigInt scaled_den = den << k;
  const BigInt y_lo = div_floor(scaled_num, scaled_den);
  const BigInt y_hi = std::min(div_ceil(scaled_num, scaled_den), BigInt(2 * one()));
  const FixedBracket& ln2 = ln2_fixed();
  // log2 y = ln y / ln 2
  const BigInt frac_lo = div_floor(ln_fixed(y_lo, false) * one(), ln2.hi);
  const BigInt frac_hi = div_ceil(ln_fixed(y_hi, true) * one(), ln2.lo);
  const BigInt base = BigInt(k) << kFrac;
  return Bracket{from_fixed(base + frac_lo), from_fixed(base + std::min(frac_hi, BigInt(one())))};
}

}  // namespace probid
