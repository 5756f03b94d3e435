#include "doctest.h"

#include <algorithm>

#include "common/errors.hpp"
#include "common/fixtures.hpp"
#include "probid/bracket.hpp"
#include "probid/sampling.hpp"

using namespace probid;

// Frozen values below come from tests/oracle/sampling_oracle.py, an
// independent Python implementation of the generator and of inversion.

TEST_CASE("SplitMix64 reference streams") {
  Rng zero(0);
  CHECK(zero.next() == 16294208416658607535ULL);
  CHECK(zero.next() == 7960286522194355700ULL);
  CHECK(zero.next() == 487617019471545679ULL);
  Rng r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
  CHECK(r.next() == 9817491932198370423ULL);
  Rng a(99), b(99);
  for (int k = 0; k < 100; ++k) CHECK(a.next53() == b.next() >> 11);
}

TEST_CASE("dyadic thresholds and inversion") {
  CHECK(dyadic_threshold(Rational(0)) == 0);
  CHECK(dyadic_threshold(Rational(1)) == kUniformScale);
  CHECK(dyadic_threshold(Rational(1, 2)) == kUniformScale / 2);
  CHECK(dyadic_threshold(Rational(1, 3)) == 3002399751580330ULL);  // floor(2^53 / 3)
  const std::vector<std::uint64_t> t{10, 20, kUniformScale};
  CHECK(invert(0, t) == 0);
  CHECK(invert(10, t) == 0);  // a tie goes to the lower index
  CHECK(invert(11, t) == 1);
  CHECK(invert(20, t) == 1);
  CHECK(invert(21, t) == 2);
}

TEST_CASE("draw_iid") {
  const auto half = make_finite_pmf({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  const SamplePrefix empty = draw_iid(half, 5, 0);
  CHECK(empty.size() == 0);
  CHECK(empty.count(0) == 0);

  const SamplePrefix s = draw_iid(half, 1, 10000);
  CHECK(s.count(1) == 4836);
  CHECK(s.count(0) + s.count(1) == 10000);
  CHECK(abs(Rational(4836, 10000) - Rational(1, 2)) < tau(10000).hi);

  const auto third = make_finite_pmf({{1, Rational(1, 3)}, {2, Rational(2, 3)}});
  CHECK(draw_iid(third, 7, 20).symbols ==
        Word{2, 1, 2, 2, 2, 1, 2, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2});

  const auto point = make_finite_pmf({{9, Rational(1)}});
  for (std::uint64_t seed : {0, 1, 77}) CHECK(draw_iid(point, seed, 50).symbols == Word(50, 9));

  CHECK(draw_iid(make_geometric_pmf(), 3, 15).symbols ==
        Word{1, 2, 2, 1, 1, 2, 1, 4, 1, 4, 2, 2, 1, 1, 2});
}

TEST_CASE("sample prefix counts match symbols") {
  const auto p = build_pmf(fixtures::twentieths({1, 1, 9, 9}));
  const SamplePrefix s = draw_iid(p, 42, 5000);
  std::uint64_t total = 0;
  for (const auto& [a, c] : s.counts) {
    CHECK(c == static_cast<std::uint64_t>(std::count(s.symbols.begin(), s.symbols.end(), a)));
    total += c;
  }
  CHECK(total == s.size());
  CHECK(make_prefix(s.symbols).counts == s.counts);
}

TEST_CASE("reproducibility") {
  const auto p = build_pmf(fixtures::twentieths({7, 3, 5, 5}));
  CHECK(draw_iid(p, 11, 2000).symbols == draw_iid(p, 11, 2000).symbols);
  CHECK(draw_iid(p, 11, 2000).symbols != draw_iid(p, 12, 2000).symbols);
  const auto qa = build_chain(fixtures::chain_a());
  CHECK(run_chain(qa, 1, 3, 1000) == run_chain(qa, 1, 3, 1000));
  const auto mu = make_mu_k(3, 2);
  CHECK(draw_from_measure(mu, 8, 300).symbols == draw_from_measure(mu, 8, 300).symbols);
}

TEST_CASE("uniform sweep stays inside the envelope") {
  const auto p = build_pmf(fixtures::twentieths({5, 5, 5, 5}));
  const Rational bound = tau(100000).hi;
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SamplePrefix s = draw_iid(p, seed, 100000);
    bool ok = true;
    for (Symbol a = 1; a <= 4; ++a) {
      ok = ok && abs(Rational(static_cast<std::int64_t>(s.count(a)), 100000) - Rational(1, 4)) <= bound;
    }
    inside += ok ? 1 : 0;
  }
  CHECK(inside >= 19);
}

TEST_CASE("run_chain") {
  const auto qa = build_chain(fixtures::chain_a());
  CHECK(run_chain(qa, 1, 5, 12) == Word{1, 2, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1});
  CHECK(run_chain(qa, 1, 5, 0).empty());
  CHECK(error_kind([&] { run_chain(qa, 3, 5, 10); }) == ErrorKind::BadStart);

  const auto sym = build_chain(fixtures::chain_b());
  const Word run = run_chain(sym, 1, 1, 10000);
  const auto ones = std::count(run.begin(), run.end(), Symbol{1});
  CHECK(ones == 5164);
  CHECK(abs(Rational(ones, 10000) - Rational(1, 2)) < Rational(31, 1000));

  // State 3 of the three-state chain always moves to state 1.
  const auto three = build_chain(fixtures::chain_three());
  const Word r3 = run_chain(three, 3, 17, 3000);
  Symbol prev = 3;
  for (Symbol s : r3) {
    if (prev == 3) CHECK(s == 1);
    prev = s;
  }
}

TEST_CASE("draw_from_measure") {
  const auto [mu1, mu0] = make_black_swan_pair(4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(draw_from_measure(mu1, seed, 40).symbols == Word(40, 1));

  // mu0 splits at the switch point: both continuations occur across seeds,
  // and after a b only b's follow.
  int switched = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Word w = draw_from_measure(mu0, seed, 12).symbols;
    CHECK(Word(w.begin(), w.begin() + 4) == Word(4, 1));
    if (w[4] == 2) {
      ++switched;
      CHECK(Word(w.begin() + 4, w.end()) == Word(8, 2));
    } else {
      CHECK(w == Word(12, 1));
    }
  }
  CHECK(switched > 0);
  CHECK(switched < 40);

  // The iid measure's conditionals equal p, so the draws coincide with draw_iid.
  const auto third = make_finite_pmf({{1, Rational(1, 3)}, {2, Rational(2, 3)}});
  CHECK(draw_from_measure(make_iid_measure(third), 7, 500).symbols == draw_iid(third, 7, 500).symbols);

  const auto c = make_constant_measure(1, {1, 2});
  CHECK(error_kind([&] { conditionals(c, Word{2}); }) == ErrorKind::ZeroMassPrefix);
}

TEST_CASE("conditionals sum to one") {
  const auto [mu1, mu0] = make_black_swan_pair(3);
  const std::vector<MeasureHypothesis> measures{make_mu_k(3, 1), mu0, mu1,
                                                make_iid_measure(make_simple_pmf("j", 3))};
  const std::vector<Word> prefixes{{}, {1}, {1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 2}, {2, 3, 1}};
  for (const auto& mu : measures) {
    for (const auto& x : prefixes) {
      if (mu.eval(x).sign() == 0) continue;
      Rational total = 0;
      for (const auto& c : conditionals(mu, x)) total += c;
      CHECK(total == Rational(1));
    }
  }
}
