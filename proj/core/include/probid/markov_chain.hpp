#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Finite-state, time-homogeneous ergodic Markov chain with exact rational
/// transitions. The stationary distribution is solved once at construction.
class MarkovHypothesis {
 public:
  /// Errors: BadSymbol (duplicate or empty state list), SumNotOne,
  /// NonpositiveMass (negative entry), NotErgodic.
  MarkovHypothesis(std::vector<Symbol> states, RationalMatrix transitions);

  const std::vector<Symbol>& states() const { return states_; }
  const RationalMatrix& transitions() const { return q_; }
  const std::vector<Rational>& stationary() const { return pi_; }

  std::optional<std::size_t> index_of(Symbol state) const;
  /// q_{from,to} by state label; 0 when to is not a state.
  Rational transition(Symbol from, Symbol to) const;

  std::string canonical_key() const;
  std::string describe() const;

 private:
  std::vector<Symbol> states_;
  RationalMatrix q_;
  std::vector<Rational> pi_;
};

}  // namespace probid
