#include "probid/measure.hpp"

#include <algorithm>

#include "probid/error.hpp"

namespace probid {

std::vector<Rational> detail::MeasureModel::prefix_masses(std::span<const Symbol> x) const {
  std::vector<Rational> out;
  out.reserve(x.size() + 1);
  for (std::size_t j = 0; j <= x.size(); ++j) out.push_back(mass(x.first(j)));
  return out;
}

std::vector<Rational> detail::MeasureModel::conditionals(std::span<const Symbol> x) const {
  const Rational base = mass(x);
  std::vector<Symbol> extended(x.begin(), x.end());
  extended.push_back(0);
  std::vector<Rational> out;
  for (Symbol a : alphabet()) {
    extended.back() = a;
    out.push_back(mass(extended) / base);
  }
  return out;
}

namespace {

bool in_alphabet(const std::vector<Symbol>& alphabet, Symbol a) {
  return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
}

std::string alphabet_key(std::vector<Symbol> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  std::string key = "{";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(alphabet[i]);
  }
  return key + "}";
}

class ConstantMeasure final : public detail::MeasureModel {
 public:
  ConstantMeasure(Symbol a, std::vector<Symbol> alphabet)
      : a_(a), alphabet_(std::move(alphabet)) {
    if (!in_alphabet(alphabet_, a_)) {
      throw Error(ErrorKind::BadSymbol, "symbol " + std::to_string(a_) + " not in alphabet");
    }
  }

  const std::vector<Symbol>& alphabet() const override { return alphabet_; }

  Rational mass(std::span<const Symbol> x) const override {
    return std::all_of(x.begin(), x.end(), [&](Symbol s) { return s == a_; }) ? 1 : 0;
  }

  std::vector<Rational> prefix_masses(std::span<const Symbol> x) const override {
    std::vector<Rational> out{Rational(1)};
    bool on_path = true;
    for (Symbol s : x) {
      on_path = on_path && s == a_;
      out.push_back(on_path ? 1 : 0);
    }
    return out;
  }

  std::string canonical_key() const override {
    return "const " + std::to_string(a_) + " " + alphabet_key(alphabet_);
  }
  std::string describe() const override {
    return "constant{" + std::to_string(a_) + " over " + alphabet_key(alphabet_) + "}";
  }

 private:
  Symbol a_;
  std::vector<Symbol> alphabet_;
};

class MuK final : public detail::MeasureModel {
 public:
  MuK(std::uint64_t k, Symbol a) : k_(k), a_(a) {
    if (k_ < 1 || a_ < 1 || a_ > k_) {
      throw Error(ErrorKind::BadSymbol,
                  "mu_k needs 1 <= a <= k (k=" + std::to_string(k) + ", a=" + std::to_string(a) + ")");
    }
    for (Symbol s = 1; s <= k_; ++s) alphabet_.push_back(s);
  }

  const std::vector<Symbol>& alphabet() const override { return alphabet_; }

  Rational mass(std::span<const Symbol> x) const override {
    return prefix_masses(x).back();
  }

  std::vector<Rational> prefix_masses(std::span<const Symbol> x) const override {
    std::vector<Rational> out{Rational(1)};
    out.reserve(x.size() + 1);
    enum class State { OnPath, Uniform, Dead } state = State::OnPath;
    const Rational share(1, BigInt(k_));
    Rational mass = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Symbol s = x[i];
      if (s < 1 || s > k_) state = State::Dead;
      if (state == State::OnPath) {
        if (s == a_) {
          mass = share;
        } else if (i == 0) {
          // The empty prefix splits uniformly, so every first symbol gets 1/k.
          state = State::Uniform;
          mass = share;
        } else {
          state = State::Dead;
        }
      } else if (state == State::Uniform) {
        mass *= share;
      }
      out.push_back(state == State::Dead ? Rational(0) : mass);
    }
    return out;
  }

  std::string canonical_key() const override {
    if (k_ == 1) return "const 1 {1}";
    return "mu_k " + std::to_string(k_) + " " + std::to_string(a_);
  }
  std::string describe() const override {
    return "mu_k{k=" + std::to_string(k_) + ", a=" + std::to_string(a_) + "}";
  }

 private:
  std::uint64_t k_;
  Symbol a_;
  std::vector<Symbol> alphabet_;
};

class IidMeasure final : public detail::MeasureModel {
 public:
  explicit IidMeasure(PmfHypothesis p) : p_(std::move(p)) {
    const auto size = p_.support_size();
    if (!size) throw Error(ErrorKind::BadSymbol, "i.i.d. measure needs a finite support");
    for (std::size_t j = 1; j <= *size; ++j) alphabet_.push_back(p_.support_at(j));
  }

  const std::vector<Symbol>& alphabet() const override { return alphabet_; }

  Rational mass(std::span<const Symbol> x) const override {
    Rational m = 1;
    for (Symbol s : x) {
      m *= p_.eval(s);
      if (m.is_zero()) break;
    }
    return m;
  }

  std::vector<Rational> prefix_masses(std::span<const Symbol> x) const override {
    std::vector<Rational> out{Rational(1)};
    out.reserve(x.size() + 1);
    Rational m = 1;
    for (Symbol s : x) {
      if (!m.is_zero()) m *= p_.eval(s);
      out.push_back(m);
    }
    return out;
  }

  std::vector<Rational> conditionals(std::span<const Symbol> x) const override {
    for (Symbol s : x) {
      if (p_.eval(s).is_zero()) throw Error(ErrorKind::ZeroMassPrefix, "prefix has mass 0");
    }
    std::vector<Rational> out;
    for (Symbol a : alphabet_) out.push_back(p_.eval(a));
    return out;
  }

  std::string canonical_key() const override {
    if (alphabet_.size() == 1) return "const " + std::to_string(alphabet_[0]) + " " + alphabet_key(alphabet_);
    return "iid " + p_.canonical_key();
  }
  std::string describe() const override { return "iid{" + p_.describe() + "}"; }

 private:
  PmfHypothesis p_;
  std::vector<Symbol> alphabet_;
};

// Alphabet {1, 2}: a = 1, b = 2.
class BlackSwanMu0 final : public detail::MeasureModel {
 public:
  explicit BlackSwanMu0(std::uint64_t n_switch) : n_switch_(n_switch) {
    if (n_switch_ < 1) throw Error(ErrorKind::BadSymbol, "n_switch must be >= 1");
  }

  const std::vector<Symbol>& alphabet() const override { return alphabet_; }

  Rational mass(std::span<const Symbol> x) const override { return prefix_masses(x).back(); }

  std::vector<Rational> prefix_masses(std::span<const Symbol> x) const override {
    const Rational half(1, 2);
    std::vector<Rational> out{Rational(1)};
    out.reserve(x.size() + 1);
    std::uint64_t leading_a = 0;
    bool switched = false;
    bool dead = false;
    for (Symbol s : x) {
      if (dead) {
        out.push_back(0);
        continue;
      }
      if (!switched && s == 1) {
        ++leading_a;
        out.push_back(leading_a <= n_switch_ ? Rational(1) : half);
      } else if (s == 2 && (switched || leading_a == n_switch_)) {
        switched = true;
        out.push_back(half);
      } else {
        dead = true;
        out.push_back(0);
      }
    }
    return out;
  }

  std::string canonical_key() const override { return "black_swan " + std::to_string(n_switch_); }
  std::string describe() const override {
    return "black_swan_mu0{n_switch=" + std::to_string(n_switch_) + "}";
  }

 private:
  std::uint64_t n_switch_;
  std::vector<Symbol> alphabet_{1, 2};
};

}  // namespace

Rational MeasureHypothesis::eval(std::span<const Symbol> x, const Rational& eps) const {
  return approximate(model_->mass(x), eps);
}

std::vector<Rational> MeasureHypothesis::conditionals(std::span<const Symbol> x) const {
  if (model_->mass(x).is_zero()) throw Error(ErrorKind::ZeroMassPrefix, "prefix has mass 0");
  return model_->conditionals(x);
}

MeasureHypothesis make_mu_k(std::uint64_t k, Symbol a) {
  return MeasureHypothesis(std::make_shared<MuK>(k, a));
}

MeasureHypothesis make_iid_measure(const PmfHypothesis& p) {
  return MeasureHypothesis(std::make_shared<IidMeasure>(p));
}

MeasureHypothesis make_constant_measure(Symbol a, std::vector<Symbol> alphabet) {
  return MeasureHypothesis(std::make_shared<ConstantMeasure>(a, std::move(alphabet)));
}

MeasureHypothesis make_black_swan_mu0(std::uint64_t n_switch) {
  return MeasureHypothesis(std::make_shared<BlackSwanMu0>(n_switch));
}

std::pair<MeasureHypothesis, MeasureHypothesis> make_black_swan_pair(std::uint64_t n_switch) {
  return {make_constant_measure(1, {1, 2}), make_black_swan_mu0(n_switch)};
}

}  // namespace probid
