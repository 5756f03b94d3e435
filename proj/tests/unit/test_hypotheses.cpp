#include "doctest.h"

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fixtures.hpp"
#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/spec.hpp"
#include "probid/term.hpp"

using namespace probid;

namespace {

// Every string over `alphabet` of length <= max_len, shortest first.
std::vector<Word> all_words(const std::vector<Symbol>& alphabet, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (Symbol a : alphabet) {
        Word w = out[k];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

std::vector<MeasureHypothesis> shipped_measures() {
  const auto uniform = make_finite_pmf({{1, Rational(1, 2)}, {2, Rational(1, 2)}});
  const auto skew = make_finite_pmf({{1, Rational(1, 3)}, {2, Rational(2, 3)}});
  const auto [mu1, mu0] = make_black_swan_pair(3);
  return {make_mu_k(1, 1),       make_mu_k(2, 1),       make_mu_k(3, 2),
          make_iid_measure(uniform), make_iid_measure(skew), make_constant_measure(2, {1, 2, 3}),
          mu1,                   mu0,                   make_black_swan_mu0(1)};
}

}  // namespace

TEST_CASE("term parsing and evaluation") {
  CHECK(Term::parse("1").eval(5) == 1);
  CHECK(Term::parse("j").eval(5) == 5);
  CHECK(Term::parse("2^j").eval(10) == 1024);
  CHECK(Term::parse("2^3^2").eval(0) == 512);  // right-associative
  CHECK(Term::parse("(j+1)^2*3").eval(2) == 27);
  CHECK(Term::parse(" j * j + 1 ").eval(4) == 17);
  for (const char* bad : {"", "j+", "(j", "x", "2^^j", "j 1", "-1"}) {
    CAPTURE(bad);
    CHECK(error_kind([&] { Term::parse(bad); }) == ErrorKind::BadTerm);
  }
  CHECK(error_kind([] { Term::parse("2^j").eval(5000); }) == ErrorKind::BadTerm);
}

TEST_CASE("finite pmf construction") {
  const auto p = make_finite_pmf({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  CHECK(p.support_size() == std::optional<std::size_t>(2));
  CHECK(p.support_at(1) == 0);
  CHECK(p.support_at(2) == 1);
  CHECK(p.eval(1) == Rational(1, 2));
  CHECK(p.eval(7) == Rational(0));
  CHECK(p.exact());

  const auto q = make_finite_pmf({{0, Rational(1, 3)}, {1, Rational(2, 3)}});
  CHECK(q.eval(1) == Rational(2, 3));
  CHECK(q.prefix_mass(1) == Rational(1, 3));

  CHECK(error_kind([] { make_finite_pmf({{0, Rational(1, 2)}, {1, Rational(1, 3)}}); }) ==
        ErrorKind::SumNotOne);
  CHECK(error_kind([] { make_finite_pmf({{0, Rational(0)}, {1, Rational(1)}}); }) ==
        ErrorKind::NonpositiveMass);
  CHECK(error_kind([] { make_finite_pmf({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}); }) ==
        ErrorKind::NonpositiveMass);
  CHECK(error_kind([] { make_finite_pmf({{4, Rational(1, 2)}, {4, Rational(1, 2)}}); }) ==
        ErrorKind::BadSymbol);
}

TEST_CASE("simple pmf from a term") {
  const auto uniform = make_simple_pmf("1", 4);
  for (Symbol a = 1; a <= 4; ++a) CHECK(uniform.eval(a) == Rational(1, 4));

  const auto linear = make_simple_pmf("j", 3);
  CHECK(linear.eval(1) == Rational(1, 6));
  CHECK(linear.eval(2) == Rational(2, 6));
  CHECK(linear.eval(3) == Rational(3, 6));

  const auto pow = make_simple_pmf("2^j", 3);
  CHECK(pow.eval(1) == Rational(2, 14));
  CHECK(pow.eval(2) == Rational(4, 14));
  CHECK(pow.eval(3) == Rational(8, 14));

  CHECK(error_kind([] { make_simple_pmf("0", 3); }) == ErrorKind::ZeroDenominator);
  // f must be positive on every symbol
  CHECK(error_kind([] { make_simple_pmf("j*0+0*j", 2); }).has_value());
}

TEST_CASE("geometric pmf") {
  const auto g = make_geometric_pmf();
  CHECK_FALSE(g.support_size().has_value());
  CHECK(g.eval(g.support_at(3)) == Rational(1, 8));
  CHECK(g.prefix_mass(4) == Rational(15, 16));
  CHECK(g.prefix_mass(0) == Rational(0));
  for (int m = 0; m <= 64; ++m) {
    CAPTURE(m);
    CHECK(Rational(1) - g.prefix_mass(static_cast<std::size_t>(m)) == pow2(-m));
  }
}

TEST_CASE("pmf normalization for shipped finite families") {
  std::vector<PmfHypothesis> pmfs;
  for (const auto& spec : fixtures::ten_pmfs()) pmfs.push_back(build_pmf(spec));
  pmfs.push_back(make_simple_pmf("j", 10));
  pmfs.push_back(make_simple_pmf("2^j+j", 12));
  for (const auto& p : pmfs) {
    Rational total = 0;
    for (std::size_t j = 1; j <= *p.support_size(); ++j) total += p.eval(p.support_at(j));
    CHECK(total == Rational(1));
  }
}

TEST_CASE("evaluation contract holds for every precision") {
  const Rational eps_values[] = {Rational(0), pow2(-10), pow2(-20)};
  const auto g = make_geometric_pmf();
  const auto s = make_simple_pmf("2^j+1", 7);
  for (const auto& eps : eps_values) {
    for (std::size_t j = 1; j <= 7; ++j) {
      CHECK(abs(g.eval(g.support_at(j), eps) - g.eval(g.support_at(j))) <= eps);
      CHECK(abs(s.eval(s.support_at(j), eps) - s.eval(s.support_at(j))) <= eps);
      CHECK(abs(g.prefix_mass(j, eps) - g.prefix_mass(j)) <= eps);
    }
    for (const auto& mu : shipped_measures()) {
      for (const auto& w : all_words(mu.alphabet(), 4)) CHECK(abs(mu.eval(w, eps) - mu.eval(w)) <= eps);
    }
  }
}

TEST_CASE("mu_k values") {
  CHECK(make_mu_k(2, 1).eval(Word{}) == Rational(1));
  CHECK(make_mu_k(2, 1).eval(Word{1, 1, 1}) == Rational(1, 2));
  CHECK(make_mu_k(1, 1).eval(Word(9, 1)) == Rational(1));
  CHECK(make_mu_k(3, 2).eval(Word{2, 2, 2, 2}) == Rational(1, 3));
  CHECK(make_mu_k(3, 2).eval(Word{2, 1}) == Rational(0));
  CHECK(make_mu_k(3, 2).eval(Word{1, 3}) == Rational(1, 9));
  CHECK(error_kind([] { make_mu_k(2, 3); }) == ErrorKind::BadSymbol);
  CHECK(error_kind([] { make_mu_k(2, 0); }) == ErrorKind::BadSymbol);
}

TEST_CASE("iid and constant measures") {
  const auto u = make_iid_measure(make_finite_pmf({{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
  CHECK(u.eval(Word{0, 1, 0}) == Rational(1, 8));
  CHECK(u.eval(Word{}) == Rational(1));
  const auto p = make_iid_measure(make_finite_pmf({{0, Rational(1, 3)}, {1, Rational(2, 3)}}));
  CHECK(p.eval(Word{1, 1}) == Rational(4, 9));
  CHECK(error_kind([] { make_iid_measure(make_geometric_pmf()); }) == ErrorKind::BadSymbol);
  const auto c = make_constant_measure(1, {1, 2});
  CHECK(c.eval(Word(40, 1)) == Rational(1));
  CHECK(c.eval(Word{1, 2}) == Rational(0));
}

TEST_CASE("black swan pair") {
  const auto [mu1, mu0] = make_black_swan_pair(5);
  CHECK(mu1.eval(Word(5, 1)) == Rational(1));
  CHECK(mu0.eval(Word(5, 1)) == Rational(1));
  Word switched(5, 1);
  switched.push_back(2);
  CHECK(mu0.eval(switched) == Rational(1, 2));
  CHECK(mu0.eval(Word(6, 1)) == Rational(1, 2));
  switched.push_back(1);
  CHECK(mu0.eval(switched) == Rational(0));
  CHECK(error_kind([] { make_black_swan_pair(0); }) == ErrorKind::BadSymbol);
}

TEST_CASE("measure equalities up to length 8") {
  for (const auto& mu : shipped_measures()) {
    CAPTURE(mu.describe());
    CHECK(mu.eval(Word{}) == Rational(1));
    for (const auto& w : all_words(mu.alphabet(), 8)) {
      Rational children = 0;
      Word ext = w;
      ext.push_back(0);
      for (Symbol a : mu.alphabet()) {
        ext.back() = a;
        const Rational m = mu.eval(ext);
        CHECK(m <= mu.eval(w));
        CHECK(m.sign() >= 0);
        children += m;
      }
      CHECK(children == mu.eval(w));
      const auto masses = mu.prefix_masses(w);
      REQUIRE(masses.size() == w.size() + 1);
      CHECK(masses.back() == mu.eval(w));
    }
  }
}

TEST_CASE("markov hypothesis validation") {
  const auto a = build_chain(fixtures::chain_a());
  CHECK(a.stationary() == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(a.transition(2, 2) == Rational(3, 4));
  CHECK(a.index_of(2) == std::optional<std::size_t>(1));
  CHECK_FALSE(a.index_of(5).has_value());

  const RationalMatrix identity{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK(error_kind([&] { MarkovHypothesis({1, 2}, identity); }) == ErrorKind::NotErgodic);
  const RationalMatrix flip{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(error_kind([&] { MarkovHypothesis({1, 2}, flip); }) == ErrorKind::NotErgodic);
  const RationalMatrix short_row{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(error_kind([&] { MarkovHypothesis({1, 2}, short_row); }) == ErrorKind::SumNotOne);
  const RationalMatrix negative{{Rational(3, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(error_kind([&] { MarkovHypothesis({1, 2}, negative); }).has_value());
  CHECK(error_kind([&] { MarkovHypothesis({1, 1}, build_chain(fixtures::chain_b()).transitions()); })
            .has_value());
}

TEST_CASE("canonical keys identify equal functions") {
  CHECK(make_simple_pmf("1", 4).canonical_key() ==
        make_finite_pmf({{4, Rational(1, 4)}, {3, Rational(1, 4)}, {2, Rational(1, 4)}, {1, Rational(1, 4)}})
            .canonical_key());
  CHECK(make_simple_pmf("j", 3).canonical_key() != make_simple_pmf("1", 3).canonical_key());
  CHECK(make_mu_k(2, 1).canonical_key() != make_mu_k(2, 2).canonical_key());
}

TEST_CASE("spec round trip through JSON") {
  std::vector<HypothesisSpec> specs = fixtures::ten_pmfs();
  specs.push_back(SimplePmfSpec{"2^j", 3});
  specs.push_back(GeometricPmfSpec{});
  specs.push_back(fixtures::chain_three());
  specs.push_back(MuKSpec{3, 2});
  specs.push_back(IidMeasureSpec{SimplePmfSpec{"j", 2}});
  specs.push_back(ConstantMeasureSpec{1, {1, 2}});
  specs.push_back(BlackSwanSpec{5});
  for (const auto& spec : specs) {
    const auto j = to_json(spec);
    CAPTURE(j.dump());
    CHECK(spec_from_json(nlohmann::json::parse(j.dump())) == spec);
    CHECK(family_name(spec) == j.at("family").get<std::string>());
  }
  CHECK(kind_of(MuKSpec{}) == HypothesisKind::Measure);
  CHECK(kind_of(fixtures::chain_a()) == HypothesisKind::Markov);
  CHECK(error_kind([] { build_pmf(MuKSpec{2, 1}); }) == ErrorKind::ConfigInvalid);
}

TEST_CASE("spec parsing reports the failing field") {
  const auto path_of = [](const char* text) -> std::string {
    try {
      spec_from_json(nlohmann::json::parse(text), "h");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConfigInvalid);
      return e.what();
    }
    return "";
  };
  CHECK(path_of(R"({"probs": []})") == "h.family");
  CHECK(path_of(R"({"family": "nope"})") == "h.family");
  CHECK(path_of(R"({"family": "simple", "n": 3})") == "h.term");
  CHECK(path_of(R"({"family": "finite", "probs": [[1, "1/x"]]})") == "h.probs[0][1]");
  CHECK(path_of(R"({"family": "chain", "states": [1], "rows": [["x"]]})") == "h.rows[0][0]");
  CHECK(path_of(R"({"family": "mu_k", "k": -1, "a": 1})") == "h.k");
}
