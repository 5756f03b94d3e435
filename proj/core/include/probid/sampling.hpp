#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

/// SplitMix64. Identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Numerator k of the dyadic uniform u = k / 2^53 in [0, 1).
  std::uint64_t next53() { return next() >> 11; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kUniformScale = std::uint64_t{1} << 53;

/// floor(c * 2^53) for 0 <= c <= 1. For an integer k, k / 2^53 <= c iff
/// k <= dyadic_threshold(c), so inversion against exact cumulative masses
/// reduces to integer comparisons.
std::uint64_t dyadic_threshold(const Rational& c);

/// Least index j with u <= cumulative[j] (thresholds from dyadic_threshold).
/// Ties go to the lower index.
std::size_t invert(std::uint64_t u, std::span<const std::uint64_t> thresholds);

struct SamplePrefix {
  Word symbols;
  std::map<Symbol, std::uint64_t> counts;

  void push(Symbol a);
  std::uint64_t size() const { return symbols.size(); }
  std::uint64_t count(Symbol a) const;
};

SamplePrefix make_prefix(std::span<const Symbol> symbols);

/// Inversion sampler for an exact pmf. Thresholds for infinite supports are
/// extended by doubling the prefix length until it covers the draw.
class PmfSampler {
 public:
  explicit PmfSampler(PmfHypothesis p);
  Symbol draw(Rng& rng);

 private:
  void extend_to(std::size_t m);

  PmfHypothesis p_;
  std::vector<std::uint64_t> thresholds_;  // thresholds_[j-1] for prefix mass m = j
};

/// One inversion table per row of Q.
class ChainSampler {
 public:
  explicit ChainSampler(const MarkovHypothesis& m);
  /// Errors: BadStart when `from` is not a state.
  Symbol step(Symbol from, Rng& rng) const;

 private:
  const MarkovHypothesis* m_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

SamplePrefix draw_iid(const PmfHypothesis& p, std::uint64_t seed, std::uint64_t n);

/// X_1..X_n with X_{t+1} drawn from row X_t, starting from X_0 = x0 (not
/// included). Errors: BadStart.
Word run_chain(const MarkovHypothesis& m, Symbol x0, std::uint64_t seed, std::uint64_t n);

/// Exact conditionals mu(xa) / mu(x) over the alphabet, in alphabet order.
/// Errors: ZeroMassPrefix when mu(x) = 0.
std::vector<Rational> conditionals(const MeasureHypothesis& mu, std::span<const Symbol> x);

/// Sequential sampling through the conditionals. Errors: ZeroMassPrefix.
SamplePrefix draw_from_measure(const MeasureHypothesis& mu, std::uint64_t seed, std::uint64_t n);

}  // namespace probid
