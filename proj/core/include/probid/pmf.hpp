#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

namespace detail {

class PmfModel {
 public:
  virtual ~PmfModel() = default;
  virtual std::optional<std::size_t> support_size() const = 0;
  virtual Symbol support_at(std::size_t j) const = 0;
  virtual Rational mass(Symbol a) const = 0;
  virtual Rational prefix_mass(std::size_t m) const = 0;
  virtual std::string canonical_key() const = 0;
  virtual std::string describe() const = 0;
};

}  // namespace detail

/// Computable probability mass function over a countable support a_1, a_2, ...
///
/// Evaluation follows the halting-algorithm contract: eval(a, eps) is within
/// eps of p(a). All shipped families are exact, so eps = 0 returns p(a)
/// itself. Symbols outside the support have mass 0. Copies share the
/// immutable model.
class PmfHypothesis {
 public:
  explicit PmfHypothesis(std::shared_ptr<const detail::PmfModel> model)
      : model_(std::move(model)) {}

  /// Number of support points, or nullopt for an infinite support.
  std::optional<std::size_t> support_size() const { return model_->support_size(); }
  /// a_j, 1-based.
  Symbol support_at(std::size_t j) const { return model_->support_at(j); }

  Rational eval(Symbol a, const Rational& eps = Rational(0)) const;
  /// Approximates p(a_1) + ... + p(a_m); prefix_mass(0) = 0.
  Rational prefix_mass(std::size_t m, const Rational& eps = Rational(0)) const;

  bool exact() const { return true; }

  /// Equal keys iff the two hypotheses are the same function.
  std::string canonical_key() const { return model_->canonical_key(); }
  std::string describe() const { return model_->describe(); }

 private:
  std::shared_ptr<const detail::PmfModel> model_;
};

/// Explicit finite table; support order is input order.
/// Errors: NonpositiveMass, SumNotOne, BadSymbol (repeated symbol).
PmfHypothesis make_finite_pmf(const std::vector<std::pair<Symbol, Rational>>& probs);

/// p(a_j) = f(j) / (f(1) + ... + f(n)) on symbols a_j = j, j = 1..n.
/// Errors: BadTerm, ZeroDenominator, NonpositiveMass.
PmfHypothesis make_simple_pmf(const std::string& term, std::size_t n);

/// p(a_j) = 2^-j on a_j = j, j >= 1.
PmfHypothesis make_geometric_pmf();

}  // namespace probid
