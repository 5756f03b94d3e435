#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "probid/complexity.hpp"
#include "probid/guess_trace.hpp"
#include "probid/hypothesis_list.hpp"
#include "probid/measure.hpp"
#include "probid/rational.hpp"

namespace probid {

/// Stage-n deficiency log2 1/mu(x_1..x_j) - K-hat^n(x_1..x_j). Plus infinity
/// when mu gives the prefix no mass; minus infinity while no enabled scheme
/// describes the prefix yet (K-hat still infinite).
struct Sigma {
  enum class Kind { MinusInfinity, Finite, PlusInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static Sigma finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  static Sigma plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
  static Sigma minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }

  /// Strict sigma < bound.
  bool below(const Rational& bound) const;
  std::string str() const;
};

bool operator<(const Sigma& a, const Sigma& b);
bool operator==(const Sigma& a, const Sigma& b);

/// Upper endpoint of a 2^-100-wide bracket on log2 1/m, for 0 < m <= 1.
Rational log2_inverse_upper(const Rational& m);

/// One sigma value. j <= |x|, n >= 1.
Sigma sigma_stage(const MeasureHypothesis& mu, std::span<const Symbol> x, std::size_t j,
                  std::uint64_t n, const ComplexityEstimator& est);

/// Runs the identification step at many n over one fixed sequence, reusing
/// masses, logarithms and description costs between steps. The estimator
/// stage at step n is stage_multiplier * n.
class MeasureIdentifier {
 public:
  /// Supports steps with n <= min(max_n, |x|).
  MeasureIdentifier(const MeasureInterleaved& list, std::span<const Symbol> x,
                    const ComplexityEstimator& est, std::uint64_t max_n,
                    std::uint64_t stage_multiplier = 1);

  /// max over j = 1..n of sigma(j) at step n for base element b.
  Sigma max_sigma(std::size_t base, std::uint64_t n);

  /// Least position i <= n with max_j sigma^n(j) < i for the measure behind
  /// i, or 1 when no position qualifies. Holes never qualify.
  std::size_t step(std::uint64_t n);

 private:
  const std::vector<std::optional<Rational>>& logs(std::size_t base);

  const MeasureInterleaved& list_;
  Word x_;
  std::uint64_t max_n_;
  std::uint64_t multiplier_;
  PrefixCosts costs_;
  // logs_[b-1][j-1]: log2 upper endpoint for prefix j, nullopt for zero mass
  std::vector<std::optional<std::vector<std::optional<Rational>>>> logs_;
};

/// Single step. Errors: IndexOutOfRange when |x| < n or n = 0.
std::size_t identify_measure_step(const MeasureInterleaved& list, std::span<const Symbol> x,
                                  std::uint64_t n, const ComplexityEstimator& est);

/// Steps at n = stride, 2 stride, ..., n_max over a fixed sequence.
/// Errors: IndexOutOfRange when |x| < n_max and the schedule is nonempty.
GuessTrace identify_measure_stream(const MeasureInterleaved& list, std::span<const Symbol> x,
                                   std::uint64_t n_max, std::uint64_t stride,
                                   const ComplexityEstimator& est,
                                   std::uint64_t stage_multiplier = 1);

/// Same over n_max symbols drawn from `source` with the given seed.
GuessTrace identify_measure_stream(const MeasureInterleaved& list, const MeasureHypothesis& source,
                                   std::uint64_t seed, std::uint64_t n_max, std::uint64_t stride,
                                   const ComplexityEstimator& est,
                                   std::uint64_t stage_multiplier = 1);

}  // namespace probid
