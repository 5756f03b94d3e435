#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "probid/bracket.hpp"
#include "probid/error.hpp"
#include "probid/rational.hpp"

using probid::Bracket;
using probid::Position;
using probid::Rational;

namespace {

// Reference values of sqrt(ln n / n), 40 significant digits, computed with
// mpmath at mp.dps = 40.
struct TauOracle {
  std::uint64_t n;
  const char* value;  // decimal string
};

constexpr TauOracle kTauOracle[] = {
    {2, "0.5887050112577373455057846632298498188737"},
    {3, "0.6051479953058617135230947578712197624218"},
    {16, "0.4162773055788488781765823224476005238153"},
    {100, "0.2145966026289347239636183570290047400470"},
    {10000, "0.03034854258770292701725944787099756914787"},
    {50000, "0.01471038971911368710538380462744497398518"},
    {100000, "0.01072983013144673619818091785145023700235"},
    {1000000000000ULL, "0.000005256521769756931978630121358100996004349"},
};

// Decimal string -> exact rational.
Rational decimal(const std::string& s) {
  const auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  probid::BigInt den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(probid::BigInt(digits), den);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  const Rational a = Rational::parse("6/8");
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 4);
  CHECK_THROWS_AS(Rational::parse("-2/-1"), probid::Error);
  CHECK(Rational::parse(" 1/3 ") + Rational::parse("1/6") == Rational::parse("1/2"));
  CHECK(Rational::parse("-3/9").str() == "-1/3");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), probid::Error);
  CHECK_THROWS_AS(Rational::parse("x"), probid::Error);
  CHECK_THROWS_AS(Rational::parse(""), probid::Error);
}

TEST_CASE("rational field laws hold exactly on a grid") {
  std::vector<Rational> values;
  for (int p = -4; p <= 4; ++p)
    for (int q = 1; q <= 5; ++q) values.emplace_back(p, q);
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : {Rational::parse("1/7"), Rational::parse("-5/3"), Rational(2)}) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
}

TEST_CASE("ceil_log2 and approximate") {
  CHECK(probid::ceil_log2(Rational(1)) == 0);
  CHECK(probid::ceil_log2(Rational(8)) == 3);
  CHECK(probid::ceil_log2(Rational(9)) == 4);
  CHECK(probid::ceil_log2(Rational::parse("1/8")) == -3);
  CHECK(probid::ceil_log2(Rational::parse("3/16")) == -2);
  const Rational third = Rational::parse("1/3");
  for (int k : {0, 10, 20}) {
    const Rational eps = k == 0 ? Rational(0) : probid::pow2(-k);
    CHECK(probid::abs(probid::approximate(third, eps) - third) <= eps);
  }
  CHECK(probid::approximate(third, Rational(0)) == third);
}

TEST_CASE("tau brackets contain the high-precision oracle") {
  const Rational max_width = probid::pow2(-20);
  for (const auto& row : kTauOracle) {
    CAPTURE(row.n);
    const Bracket b = probid::tau(row.n);
    const Rational truth = decimal(row.value);
    // The oracle itself is only good to ~1e-40; widen by that.
    const Rational slack = Rational(1, probid::BigInt("1000000000000000000000000000000000000000"));
    CHECK(b.lo <= truth + slack);
    CHECK(truth - slack <= b.hi);
    CHECK(b.lo <= b.hi);
    CHECK(b.width() <= max_width);
  }
}

TEST_CASE("tau(1) is exactly zero") {
  const Bracket b = probid::tau(1);
  CHECK(b.lo == Rational(0));
  CHECK(b.hi == Rational(0));
}

TEST_CASE("tau lower endpoint is nonincreasing from n = 3") {
  const Rational width = probid::pow2(-20);
  Bracket prev = probid::tau(3);
  for (std::uint64_t n = 4; n <= 3000; ++n) {
    const Bracket cur = probid::tau(n);
    CHECK(cur.lo <= prev.lo + width);
    prev = cur;
  }
}

TEST_CASE("tau falls below 1/20 from n = 3233 on") {
  // Root of sqrt(ln x / x) = 1/20 is x = 3232.39 (mpmath findroot).
  const Rational delta = Rational::parse("1/20");
  CHECK(probid::tau(3232).lo > delta);
  for (std::uint64_t n : {3233ULL, 3500ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    CHECK(probid::tau(n).hi < delta);
  }
}

TEST_CASE("cmp_against_bracket") {
  const Rational quarter = Rational::parse("1/4");
  const Bracket b{quarter, quarter + probid::pow2(-20)};
  CHECK(probid::cmp_against_bracket(Rational::parse("1/8"), b) == Position::Below);
  CHECK(probid::cmp_against_bracket(Rational::parse("1/2"), b) == Position::Above);
  CHECK(probid::cmp_against_bracket(quarter + probid::pow2(-21), b) == Position::Inside);
  CHECK(probid::cmp_against_bracket(quarter, b) == Position::Inside);

  // Exactly one outcome for a sweep of values.
  for (int k = 0; k <= 64; ++k) {
    const Rational v(k, 128);
    const Position p = probid::cmp_against_bracket(v, b);
    const int hits = (v < b.lo) + (v > b.hi) + (b.lo <= v && v <= b.hi);
    CHECK(hits == 1);
    CHECK((p == Position::Below) == (v < b.lo));
    CHECK((p == Position::Above) == (v > b.hi));
  }
}

TEST_CASE("ln and log2 brackets") {
  // ln 2 = 0.6931471805599453094172321214581765680755
  const Rational ln2 = decimal("0.6931471805599453094172321214581765680755");
  const Bracket l = probid::ln_bracket(2);
  const Rational slack = probid::pow2(-120);
  CHECK(l.lo <= ln2 + slack);
  CHECK(ln2 - slack <= l.hi);

  const Bracket exact = probid::log2_bracket(Rational(1));
  CHECK(exact.lo == Rational(0));
  CHECK(exact.hi == Rational(0));

  for (int k : {1, 7, 100, 1000}) {
    const Bracket b = probid::log2_bracket(probid::pow2(k));
    CHECK(b.lo <= Rational(k));
    CHECK(Rational(k) <= b.hi);
    CHECK(b.width() <= probid::pow2(-100));
  }
  // log2(3/7 * 2^40) = 38.77760757866355207401176962671598570012
  const Bracket odd = probid::log2_bracket(Rational::parse("3/7") * probid::pow2(40));
  const Rational truth = decimal("38.77760757866355207401176962671598570012");
  CHECK(odd.lo <= truth + probid::pow2(-100));
  CHECK(truth - probid::pow2(-100) <= odd.hi);
}
