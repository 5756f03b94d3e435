#include "doctest.h"

#include "common/fixtures.hpp"
#include "probid/bracket.hpp"
#include "probid/iid_identify.hpp"

using namespace probid;

namespace {

SamplePrefix ones_and_zeros(int ones, int zeros) {
  Word w(static_cast<std::size_t>(ones), 1);
  w.insert(w.end(), static_cast<std::size_t>(zeros), 0);
  return make_prefix(w);
}

PmfHypothesis binary(Rational p1) { return make_finite_pmf({{0, Rational(1) - p1}, {1, p1}}); }

}  // namespace

TEST_CASE("observed_support") {
  CHECK(observed_support(make_prefix(Word{3, 1, 3})) == std::set<Symbol>{1, 3});
  CHECK(observed_support(make_prefix(Word{})).empty());
  CHECK(observed_support(make_prefix(Word{4, 4, 4})) == std::set<Symbol>{4});
}

TEST_CASE("mass_cutoff") {
  const auto g = make_geometric_pmf();
  CHECK(mass_cutoff(g, 16) == 3);  // tail 1/8 < 1/4, tail 1/4 is not
  CHECK(mass_cutoff(g, 1) == 1);
  CHECK(mass_cutoff(g, 17) == 3);
  CHECK(mass_cutoff(g, 64) == 4);
  CHECK(mass_cutoff(g, 65) == 4);  // tail 1/16: 65/256 < 1
  const auto u = make_simple_pmf("1", 4);
  CHECK(mass_cutoff(u, 1) == 1);
  CHECK(mass_cutoff(u, 100) == 4);
  CHECK(mass_cutoff(u, 1000000) == 4);
}

TEST_CASE("candidate_test") {
  const SamplePrefix s = ones_and_zeros(53, 47);
  CHECK(candidate_test(binary(Rational(1, 2)), s) == TestResult::Pass);
  CHECK(candidate_test(binary(Rational(9, 10)), s) == TestResult::Fail);
  // tau(1) = 0 and the comparison is strict
  CHECK(candidate_test(make_finite_pmf({{1, Rational(1)}}), make_prefix(Word{1})) == TestResult::Fail);
  // Unobserved symbols in B still count: q puts 1/2 on symbol 2 which never occurs.
  const auto spread = make_finite_pmf({{1, Rational(1, 2)}, {2, Rational(1, 2)}});
  CHECK(candidate_test(spread, make_prefix(Word(400, 1))) == TestResult::Fail);
  // An observed symbol outside q's support is a mass-0 mismatch.
  Word w(200, 1);
  w.push_back(9);
  CHECK(candidate_test(make_finite_pmf({{1, Rational(1)}}), make_prefix(w)) == TestResult::Pass);
  w.insert(w.end(), 200, 9);
  CHECK(candidate_test(make_finite_pmf({{1, Rational(1)}}), make_prefix(w)) == TestResult::Fail);
}

TEST_CASE("identify_step") {
  const PmfList two({FinitePmfSpec{{{0, Rational(1, 10)}, {1, Rational(9, 10)}}},
                     FinitePmfSpec{{{0, Rational(1, 2)}, {1, Rational(1, 2)}}}});
  CHECK(identify_step(two, ones_and_zeros(53, 47)) == Guess(2));
  CHECK(identify_step(two, make_prefix(Word{1})) == std::nullopt);
  // scan bound min(n, length): at n = 1 only index 1 is inspected
  CHECK(identify_step(two, ones_and_zeros(1, 0)) == std::nullopt);
}

TEST_CASE("identify_step never exceeds a passing index") {
  const PmfList list(fixtures::duplicated_uniform());
  const auto uniform = list.get(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SamplePrefix s = draw_iid(uniform, seed, 20000);
    const Guess g = identify_step(list, s);
    for (std::size_t i = 1; i <= 10; ++i) {
      if (candidate_test(list.get(i), s) == TestResult::Pass) {
        REQUIRE(g.has_value());
        CHECK(*g <= i);
      }
    }
    CHECK(g == Guess(3));
  }
}

TEST_CASE("generated lists are scanned only up to n") {
  // f_i(j) = j + i - 1 on two symbols: (i / (2i + 1), (i + 1) / (2i + 1)).
  const PmfList list = simple_linear_list(2);
  const auto target = list.get(4);  // (4/9, 5/9)
  const GuessTrace t = identify_stream(list, target, 5, 200000, 20000);
  CHECK(t.final_guess() == Guess(4));
}

TEST_CASE("identify_stream") {
  const PmfList point({FinitePmfSpec{{{3, Rational(1)}}}});
  const GuessTrace t = identify_stream(point, point.get(1), 1, 100, 10);
  CHECK(t.final_guess() == Guess(1));
  CHECK(t.converged_at() == std::optional<std::uint64_t>(10));
  CHECK(t.checkpoints().size() == 10);

  CHECK(identify_stream(point, point.get(1), 1, 5, 10).checkpoints().empty());

  const PmfList with_geometric({SimplePmfSpec{"j", 3}, GeometricPmfSpec{}});
  CHECK(identify_stream(with_geometric, with_geometric.get(2), 9, 20000, 5000).final_guess() == Guess(2));
}

TEST_CASE("target frequencies stay inside the lower envelope") {
  const auto p = build_pmf(fixtures::twentieths({2, 6, 6, 6}));
  const Rational bound = tau(10000).lo;
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SamplePrefix s = draw_iid(p, seed, 10000);
    Rational worst = 0;
    for (Symbol a = 1; a <= 4; ++a) {
      worst = std::max(worst, abs(p.eval(a) - Rational(static_cast<std::int64_t>(s.count(a)), 10000)));
    }
    inside += worst < bound ? 1 : 0;
  }
  CHECK(inside >= 99);
}

TEST_CASE("a later duplicate never changes the converged guess") {
  auto specs = fixtures::ten_pmfs();
  const PmfList base(specs);
  specs.push_back(fixtures::twentieths({5, 5, 5, 5}));
  const PmfList extended(specs);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(identify_stream(base, base.get(6), seed, 60000, 20000).final_guess() ==
          identify_stream(extended, extended.get(11), seed, 60000, 20000).final_guess());
  }
}
