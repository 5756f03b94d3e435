#pragma once

// Hypothesis lists shared by the unit tests and the acceptance suite.

#include <array>
#include <vector>

#include "probid/hypothesis_list.hpp"
#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/spec.hpp"

namespace fixtures {

using probid::HypothesisSpec;
using probid::Rational;

inline HypothesisSpec twentieths(std::array<int, 4> w) {
  probid::FinitePmfSpec s;
  for (int k = 0; k < 4; ++k) s.probs.emplace_back(k + 1, Rational(w[k]) / Rational(20));
  return s;
}

/// Ten pmfs on {1,2,3,4}, entries multiples of 1/20, all distinct; the
/// uniform pmf sits at position 6.
inline std::vector<HypothesisSpec> ten_pmfs() {
  return {twentieths({6, 5, 5, 4}), twentieths({4, 6, 5, 5}), twentieths({5, 5, 6, 4}),
          twentieths({7, 3, 5, 5}), twentieths({2, 6, 6, 6}), twentieths({5, 5, 5, 5}),
          twentieths({3, 7, 5, 5}), twentieths({5, 5, 3, 7}), twentieths({8, 4, 4, 4}),
          twentieths({1, 1, 9, 9})};
}

/// Uniform on {1,2,3,4} at positions 3 (constant term) and 7 (explicit
/// table in reverse order); no other entry is uniform.
inline std::vector<HypothesisSpec> duplicated_uniform() {
  auto specs = ten_pmfs();
  specs[5] = twentieths({6, 6, 4, 4});
  specs[2] = probid::SimplePmfSpec{"1", 4};
  probid::FinitePmfSpec reversed;
  for (int a = 4; a >= 1; --a) reversed.probs.emplace_back(a, Rational(1, 4));
  specs[6] = reversed;
  return specs;
}

inline probid::ChainSpec chain_a() {
  return {{1, 2}, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}}};
}

inline probid::ChainSpec chain_b() {
  return {{1, 2}, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}};
}

inline probid::ChainSpec chain_three() {
  return {{1, 2, 3},
          {{Rational(0), Rational(1, 2), Rational(1, 2)},
           {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
           {Rational(1), Rational(0), Rational(0)}}};
}

/// Every chain the repository ships, in tests and sample configs.
inline std::vector<probid::ChainSpec> shipped_chains() {
  return {chain_a(), chain_b(), chain_three()};
}

inline probid::MeasureList black_swan_list(std::uint64_t n_switch) {
  return probid::MeasureList(
      {probid::ConstantMeasureSpec{1, {1, 2}}, probid::BlackSwanSpec{n_switch}});
}

/// [all-a, iid uniform on {a, b}, mu_2 with a = 1].
inline probid::MeasureList mixed_measures() {
  probid::FinitePmfSpec uniform{{{1, Rational(1, 2)}, {2, Rational(1, 2)}}};
  return probid::MeasureList({probid::ConstantMeasureSpec{1, {1, 2}},
                              probid::IidMeasureSpec{uniform}, probid::MuKSpec{2, 1}});
}

}  // namespace fixtures
