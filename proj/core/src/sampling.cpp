#include "probid/sampling.hpp"

#include <algorithm>

#include "probid/error.hpp"

namespace probid {

std::uint64_t dyadic_threshold(const Rational& c) {
  if (c.sign() <= 0) return 0;
  if (c >= Rational(1)) return kUniformScale;
  const BigInt scaled = floor(c * Rational(BigInt(kUniformScale), BigInt(1)));
  return scaled.convert_to<std::uint64_t>();
}

std::size_t invert(std::uint64_t u, std::span<const std::uint64_t> thresholds) {
  const auto it = std::lower_bound(thresholds.begin(), thresholds.end(), u);
  return static_cast<std::size_t>(it - thresholds.begin());
}

void SamplePrefix::push(Symbol a) {
  symbols.push_back(a);
  ++counts[a];
}

std::uint64_t SamplePrefix::count(Symbol a) const {
  const auto it = counts.find(a);
  return it == counts.end() ? 0 : it->second;
}

SamplePrefix make_prefix(std::span<const Symbol> symbols) {
  SamplePrefix s;
  for (Symbol a : symbols) s.push(a);
  return s;
}

PmfSampler::PmfSampler(PmfHypothesis p) : p_(std::move(p)) {
  if (const auto size = p_.support_size()) extend_to(*size);
}

void PmfSampler::extend_to(std::size_t m) {
  for (std::size_t j = thresholds_.size() + 1; j <= m; ++j) {
    thresholds_.push_back(dyadic_threshold(p_.prefix_mass(j)));
  }
}

Symbol PmfSampler::draw(Rng& rng) {
  const std::uint64_t u = rng.next53();
  if (!p_.support_size()) {
    // u < 2^53 and prefix masses tend to 1, so doubling terminates.
    std::size_t m = std::max<std::size_t>(1, thresholds_.size());
    while (thresholds_.empty() || thresholds_.back() < u) {
      extend_to(m);
      m *= 2;
    }
  }
  const std::size_t j = invert(u, thresholds_);
  return p_.support_at(j + 1);
}

ChainSampler::ChainSampler(const MarkovHypothesis& m) : m_(&m) {
  for (const auto& row : m.transitions()) {
    std::vector<std::uint64_t> thresholds;
    Rational total = 0;
    for (const Rational& q : row) {
      total += q;
      thresholds.push_back(dyadic_threshold(total));
    }
    rows_.push_back(std::move(thresholds));
  }
}

Symbol ChainSampler::step(Symbol from, Rng& rng) const {
  const auto i = m_->index_of(from);
  if (!i) throw Error(ErrorKind::BadStart, "state " + std::to_string(from) + " not in chain");
  const std::size_t j = invert(rng.next53(), rows_[*i]);
  return m_->states()[j];
}

SamplePrefix draw_iid(const PmfHypothesis& p, std::uint64_t seed, std::uint64_t n) {
  PmfSampler sampler(p);
  Rng rng(seed);
  SamplePrefix out;
  out.symbols.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) out.push(sampler.draw(rng));
  return out;
}

Word run_chain(const MarkovHypothesis& m, Symbol x0, std::uint64_t seed, std::uint64_t n) {
  if (!m.index_of(x0)) throw Error(ErrorKind::BadStart, "state " + std::to_string(x0) + " not in chain");
  const ChainSampler sampler(m);
  Rng rng(seed);
  Word run;
  run.reserve(n);
  Symbol state = x0;
  for (std::uint64_t t = 0; t < n; ++t) {
    state = sampler.step(state, rng);
    run.push_back(state);
  }
  return run;
}

std::vector<Rational> conditionals(const MeasureHypothesis& mu, std::span<const Symbol> x) {
  return mu.conditionals(x);
}

SamplePrefix draw_from_measure(const MeasureHypothesis& mu, std::uint64_t seed, std::uint64_t n) {
  Rng rng(seed);
  SamplePrefix out;
  out.symbols.reserve(n);
  const auto& alphabet = mu.alphabet();
  std::vector<std::uint64_t> thresholds(alphabet.size());
  for (std::uint64_t t = 0; t < n; ++t) {
    const std::vector<Rational> cond = mu.conditionals(out.symbols);
    Rational total = 0;
    for (std::size_t i = 0; i < cond.size(); ++i) {
      total += cond[i];
      thresholds[i] = dyadic_threshold(total);
    }
    out.push(alphabet[invert(rng.next53(), thresholds)]);
  }
  return out;
}

}  // namespace probid
