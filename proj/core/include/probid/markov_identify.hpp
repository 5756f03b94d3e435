#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "probid/bracket.hpp"
#include "probid/guess_trace.hpp"
#include "probid/markov_chain.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

template <class H>
class HypothesisList;

/// Irreducible: every state reaches every other through positive entries.
bool is_irreducible(const RationalMatrix& q);
/// Period of an irreducible chain (gcd of return times).
std::uint64_t period(const RationalMatrix& q);

/// Exact stationary distribution pi Q = pi, sum pi = 1, by rational Gaussian
/// elimination on (Q^T - I) with one equation replaced by the normalization.
/// Errors: NotErgodic (not square, not stochastic, reducible or periodic),
/// SingularSystem (internal; cannot happen for ergodic input).
std::vector<Rational> stationary(const RationalMatrix& q);

/// E_pi[X] = sum over states x of pi_x * x.
Rational ergodic_mean(const MarkovHypothesis& m);

/// Empirical visit and transition counts of a run x_1..x_n.
struct TransitionCounts {
  std::uint64_t n = 0;
  std::map<Symbol, std::uint64_t> visits;
  std::map<std::pair<Symbol, Symbol>, std::uint64_t> trans;
  std::optional<Symbol> last;

  void push(Symbol state);
  /// Number of observed transitions out of `state`.
  std::uint64_t row_total(Symbol state) const;
  std::uint64_t count(Symbol from, Symbol to) const;
};

TransitionCounts empirical(std::span<const Symbol> run);

enum class TestResult { Pass, Fail };

/// Pass iff
///  (a) every state i with visits(i)^2 >= n and a positive row total has
///      |q_ij - trans(i,j)/rowtotal(i)| strictly below tau(rowtotal(i)) for all j;
///  (b) every state x of M has |pi_x - visits(x)/n| strictly below tau(n).
/// A visit to a state outside M fails. Inside-bracket verdicts fail.
TestResult chain_candidate_test(const MarkovHypothesis& m, const TransitionCounts& c);

/// Least i <= min(n, |list|) passing chain_candidate_test; nullopt if none.
Guess identify_chain(const HypothesisList<MarkovHypothesis>& list, const TransitionCounts& c);

/// Simulates one run of `source` from its first state and records
/// identify_chain at every checkpoint of one growing run.
GuessTrace identify_chain_stream(const HypothesisList<MarkovHypothesis>& list,
                                 const MarkovHypothesis& source, std::uint64_t seed,
                                 std::uint64_t n_max, std::uint64_t stride);

}  // namespace probid
