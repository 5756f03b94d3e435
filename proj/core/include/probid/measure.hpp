#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "probid/pmf.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

namespace detail {

class MeasureModel {
 public:
  virtual ~MeasureModel() = default;
  virtual const std::vector<Symbol>& alphabet() const = 0;
  /// mu(x) for the cylinder of x. Symbols outside the alphabet give 0.
  virtual Rational mass(std::span<const Symbol> x) const = 0;
  /// mu(x_1..x_j) for j = 0..|x|.
  virtual std::vector<Rational> prefix_masses(std::span<const Symbol> x) const;
  /// mu(xa) / mu(x) for a in alphabet order; requires mu(x) > 0.
  virtual std::vector<Rational> conditionals(std::span<const Symbol> x) const;
  virtual std::string canonical_key() const = 0;
  virtual std::string describe() const = 0;
};

}  // namespace detail

/// Computable measure on infinite sequences over a finite alphabet, evaluated
/// on cylinders: mu(empty) = 1 and mu(x) = sum over a of mu(xa).
class MeasureHypothesis {
 public:
  explicit MeasureHypothesis(std::shared_ptr<const detail::MeasureModel> model)
      : model_(std::move(model)) {}

  const std::vector<Symbol>& alphabet() const { return model_->alphabet(); }

  Rational eval(std::span<const Symbol> x, const Rational& eps = Rational(0)) const;
  std::vector<Rational> prefix_masses(std::span<const Symbol> x) const {
    return model_->prefix_masses(x);
  }
  /// Errors: ZeroMassPrefix when mu(x) = 0.
  std::vector<Rational> conditionals(std::span<const Symbol> x) const;
  bool exact() const { return true; }

  std::string canonical_key() const { return model_->canonical_key(); }
  std::string describe() const { return model_->describe(); }

 private:
  std::shared_ptr<const detail::MeasureModel> model_;
};

/// Alphabet {1..k}; mu(a^n) = 1/k for n >= 1. The all-a path keeps its mass,
/// so a prefix that leaves it after the first symbol has mass 0; prefixes
/// starting with b != a split their mass uniformly: mu(x) = k^-|x|.
/// Errors: BadSymbol unless 1 <= a <= k.
MeasureHypothesis make_mu_k(std::uint64_t k, Symbol a);

/// Product measure mu(x_1..x_n) = p(x_1)...p(x_n) over p's support.
/// Errors: BadSymbol for an infinite support.
MeasureHypothesis make_iid_measure(const PmfHypothesis& p);

/// Point mass on the sequence a, a, a, ... over the given alphabet.
MeasureHypothesis make_constant_measure(Symbol a, std::vector<Symbol> alphabet);

/// Black-swan pair over {a = 1, b = 2}: first is mu1 (all a's with certainty),
/// second is mu0, which puts 1/2 on a^infinity and 1/2 on a^n_switch b b b ...
/// Errors: BadSymbol when n_switch is 0.
std::pair<MeasureHypothesis, MeasureHypothesis> make_black_swan_pair(std::uint64_t n_switch);

/// mu0 on its own.
MeasureHypothesis make_black_swan_mu0(std::uint64_t n_switch);

}  // namespace probid
