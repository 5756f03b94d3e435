#include "probid/pmf.hpp"

#include <algorithm>
#include <map>

#include "probid/error.hpp"
#include "probid/term.hpp"

namespace probid {

namespace {

class FinitePmf final : public detail::PmfModel {
 public:
  FinitePmf(std::vector<std::pair<Symbol, Rational>> probs, std::string description)
      : description_(std::move(description)) {
    Rational total = 0;
    cumulative_.push_back(0);
    for (auto& [symbol, p] : probs) {
      if (p.sign() <= 0) {
        throw Error(ErrorKind::NonpositiveMass,
                    "symbol " + std::to_string(symbol) + " has mass " + p.str());
      }
      if (!mass_.emplace(symbol, p).second) {
        throw Error(ErrorKind::BadSymbol, "symbol " + std::to_string(symbol) + " repeated");
      }
      order_.push_back(symbol);
      total += p;
      cumulative_.push_back(total);
    }
    if (total != Rational(1)) {
      throw Error(ErrorKind::SumNotOne, "masses sum to " + total.str());
    }
  }

  std::optional<std::size_t> support_size() const override { return order_.size(); }

  Symbol support_at(std::size_t j) const override {
    if (j < 1 || j > order_.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "support index " + std::to_string(j));
    }
    return order_[j - 1];
  }

  Rational mass(Symbol a) const override {
    const auto it = mass_.find(a);
    return it == mass_.end() ? Rational(0) : it->second;
  }

  Rational prefix_mass(std::size_t m) const override {
    return cumulative_[std::min(m, order_.size())];
  }

  std::string canonical_key() const override {
    std::string key = "pmf";
    for (const auto& [symbol, p] : mass_) key += " " + std::to_string(symbol) + ":" + p.str();
    return key;
  }

  std::string describe() const override { return description_; }

 private:
  std::vector<Symbol> order_;
  std::map<Symbol, Rational> mass_;
  std::vector<Rational> cumulative_;
  std::string description_;
};

class GeometricPmf final : public detail::PmfModel {
 public:
  std::optional<std::size_t> support_size() const override { return std::nullopt; }

  Symbol support_at(std::size_t j) const override {
    if (j < 1) throw Error(ErrorKind::IndexOutOfRange, "support index 0");
    return j;
  }

  Rational mass(Symbol a) const override {
    if (a < 1) return 0;
    return Rational(1, BigInt(1) << a);
  }

  Rational prefix_mass(std::size_t m) const override {
    return Rational(1) - Rational(1, BigInt(1) << m);
  }

  std::string canonical_key() const override { return "geometric"; }
  std::string describe() const override { return "geometric p(j)=2^-j"; }
};

std::string describe_table(const std::vector<std::pair<Symbol, Rational>>& probs) {
  std::string out = "finite{";
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(probs[i].first) + ":" + probs[i].second.str();
  }
  return out + "}";
}

}  // namespace

Rational PmfHypothesis::eval(Symbol a, const Rational& eps) const {
  return approximate(model_->mass(a), eps);
}

Rational PmfHypothesis::prefix_mass(std::size_t m, const Rational& eps) const {
  return approximate(model_->prefix_mass(m), eps);
}

PmfHypothesis make_finite_pmf(const std::vector<std::pair<Symbol, Rational>>& probs) {
  return PmfHypothesis(std::make_shared<FinitePmf>(probs, describe_table(probs)));
}

PmfHypothesis make_simple_pmf(const std::string& term, std::size_t n) {
  const Term f = Term::parse(term);
  std::vector<BigInt> values;
  BigInt total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    values.push_back(f.eval(BigInt(j)));
    total += values.back();
  }
  if (total == 0) {
    throw Error(ErrorKind::ZeroDenominator, "f sums to 0 over 1.." + std::to_string(n));
  }
  std::vector<std::pair<Symbol, Rational>> probs;
  for (std::size_t j = 1; j <= n; ++j) probs.emplace_back(j, Rational(values[j - 1], total));
  return PmfHypothesis(std::make_shared<FinitePmf>(
      std::move(probs), "simple{f(j)=" + term + ", n=" + std::to_string(n) + "}"));
}

PmfHypothesis make_geometric_pmf() {
  static const auto model = std::make_shared<GeometricPmf>();
  return PmfHypothesis(model);
}

}  // namespace probid
