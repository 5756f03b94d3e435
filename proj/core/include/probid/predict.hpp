#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

/// Next-symbol distribution. For an infinite support the listed masses stop
/// once they cover 1 - coverage and the remainder is kept in `tail`, so the
/// listed masses plus tail always sum to exactly 1.
struct Prediction {
  std::map<Symbol, Rational> masses;
  Rational tail;

  Rational total() const;
  Rational at(Symbol a) const;
  std::string str() const;
};

/// p itself; the history is irrelevant for an i.i.d. source.
Prediction predict_iid(const PmfHypothesis& p, std::span<const Symbol> history,
                       const Rational& coverage = Rational(0));

/// Row of Q at the last state. Errors: EmptyHistory, UnknownState.
Prediction predict_markov(const MarkovHypothesis& m, std::span<const Symbol> history);

/// a -> mu(xa) / mu(x). Errors: ZeroMassPrefix.
Prediction predict_measure(const MeasureHypothesis& mu, std::span<const Symbol> history);

struct BlackSwanReport {
  std::uint64_t n_switch = 0;
  Word history;  // a^n_switch, shared by both measures
  Rational mu1_mass;
  Rational mu0_mass;
  Prediction mu1;
  Prediction mu0;
  std::string text;
  std::string csv;  // hypothesis,history_length,symbol,probability
};

/// Errors: BadSymbol when n_switch is 0.
BlackSwanReport black_swan_demo(std::uint64_t n_switch);

}  // namespace probid
