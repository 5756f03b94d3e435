#include "probid/complexity.hpp"

#include <algorithm>
#include <bit>

#include "probid/error.hpp"

namespace probid {

std::uint64_t elias_gamma_length(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "Elias gamma of 0");
  return 2 * static_cast<std::uint64_t>(std::bit_width(k) - 1) + 1;
}

std::vector<bool> elias_gamma(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "Elias gamma of 0");
  const int width = std::bit_width(k);
  std::vector<bool> bits(static_cast<std::size_t>(width - 1), false);
  for (int b = width - 1; b >= 0; --b) bits.push_back(((k >> b) & 1U) != 0);
  return bits;
}

std::uint64_t symbol_width(std::size_t alphabet_size) {
  if (alphabet_size <= 1) return 0;
  return static_cast<std::uint64_t>(std::bit_width(alphabet_size - 1));
}

ComplexityEstimator::ComplexityEstimator(std::vector<Symbol> alphabet, SchemeSet schemes,
                                         std::optional<MeasureList> models)
    : alphabet_(std::move(alphabet)), schemes_(schemes), models_(std::move(models)) {
  if (alphabet_.empty()) throw Error(ErrorKind::BadSymbol, "estimator needs a nonempty alphabet");
}

std::uint64_t ComplexityEstimator::literal_length(std::uint64_t length) const {
  if (length == 0) return 2;
  return 2 + elias_gamma_length(length) + length * symbol_width(alphabet_.size());
}

std::uint64_t ComplexityEstimator::run_length(std::uint64_t length) const {
  return 2 + elias_gamma_length(length) + symbol_width(alphabet_.size());
}

std::uint64_t ComplexityEstimator::model_length(std::size_t i, std::uint64_t length,
                                                const Rational& mass) {
  const std::int64_t code = ceil_log2(Rational(1) / mass);
  return 2 + elias_gamma_length(i) + elias_gamma_length(length) +
         static_cast<std::uint64_t>(code) + 1;
}

std::optional<std::uint64_t> ComplexityEstimator::khat(std::span<const Symbol> x,
                                                       std::uint64_t stage) const {
  return PrefixCosts(*this, x, stage).khat(x.size(), stage);
}

PrefixCosts::PrefixCosts(const ComplexityEstimator& est, std::span<const Symbol> x,
                         std::uint64_t max_stage)
    : max_stage_(max_stage), literal_(x.size() + 1, kNone), run_(x.size() + 1, kNone) {
  const auto& alphabet = est.alphabet();
  const auto& schemes = est.schemes();
  bool in_alphabet = true;
  bool constant = true;
  if (schemes.literal) literal_[0] = est.literal_length(0);
  for (std::size_t j = 1; j <= x.size(); ++j) {
    in_alphabet = in_alphabet && std::find(alphabet.begin(), alphabet.end(), x[j - 1]) != alphabet.end();
    constant = constant && x[j - 1] == x[0];
    if (!in_alphabet) break;
    if (schemes.literal) literal_[j] = est.literal_length(j);
    if (schemes.run && constant) run_[j] = est.run_length(j);
  }
  if (schemes.model && est.models()) {
    const MeasureList& models = *est.models();
    const std::size_t count = models.scan_bound(max_stage);
    for (std::size_t i = 1; i <= count; ++i) {
      const std::vector<Rational> masses = models.get(i).prefix_masses(x);
      std::vector<std::uint64_t> costs(x.size() + 1, kNone);
      for (std::size_t j = 1; j <= x.size(); ++j) {
        if (masses[j].sign() > 0) costs[j] = ComplexityEstimator::model_length(i, j, masses[j]);
      }
      model_.push_back(std::move(costs));
    }
  }
}

std::optional<std::uint64_t> PrefixCosts::khat(std::size_t j, std::uint64_t stage) const {
  if (j >= literal_.size()) throw Error(ErrorKind::IndexOutOfRange, "prefix past end");
  if (stage == 0 || stage > max_stage_) throw Error(ErrorKind::IndexOutOfRange, "stage outside table");
  std::uint64_t best = literal_[j];
  if (stage >= static_cast<unsigned>(Scheme::Run)) best = std::min(best, run_[j]);
  if (stage >= static_cast<unsigned>(Scheme::Model)) {
    const std::size_t limit = std::min<std::uint64_t>(stage, model_.size());
    for (std::size_t i = 0; i < limit; ++i) best = std::min(best, model_[i][j]);
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::vector<bool> sfe_codeword(const MeasureHypothesis& mu, std::span<const Symbol> x) {
  const Rational mass = mu.eval(x);
  if (mass.sign() <= 0) throw Error(ErrorKind::ZeroMassPrefix, "codeword for a null string");
  // Mass of all same-length strings before x in alphabet order.
  Rational below = 0;
  Word prefix;
  for (Symbol s : x) {
    for (Symbol b : mu.alphabet()) {
      if (b == s) break;
      prefix.push_back(b);
      below += mu.eval(prefix);
      prefix.pop_back();
    }
    prefix.push_back(s);
  }
  const std::int64_t width = ceil_log2(Rational(1) / mass) + 1;
  const Rational point = below + mass / Rational(2);
  const BigInt scaled = floor(point * pow2(static_cast<int>(width)));
  std::vector<bool> bits;
  for (std::int64_t b = width - 1; b >= 0; --b) bits.push_back(bit_test(scaled, static_cast<unsigned>(b)));
  return bits;
}

namespace {

void append(std::vector<bool>& out, const std::vector<bool>& bits) {
  out.insert(out.end(), bits.begin(), bits.end());
}

std::vector<bool> tag_bits(Scheme s) {
  const auto v = static_cast<unsigned>(s);
  return {(v & 2U) != 0, (v & 1U) != 0};
}

std::vector<bool> symbol_bits(std::size_t index, std::uint64_t width) {
  std::vector<bool> bits;
  for (std::uint64_t b = width; b-- > 0;) bits.push_back(((index >> b) & 1U) != 0);
  return bits;
}

// Depth-first over strings of exactly `length` symbols whose model codeword
// fits in `budget` bits.
void enumerate_model(const MeasureHypothesis& mu, std::size_t length, std::int64_t budget,
                     Word& prefix, const std::vector<bool>& head, std::vector<Description>& out) {
  const Rational mass = mu.eval(prefix);
  if (mass.sign() <= 0) return;
  // mu never grows along an extension, so the codeword only gets longer.
  if (ceil_log2(Rational(1) / mass) + 1 > budget) return;
  if (prefix.size() == length) {
    Description d{head, Scheme::Model, prefix};
    append(d.bits, sfe_codeword(mu, prefix));
    out.push_back(std::move(d));
    return;
  }
  for (Symbol a : mu.alphabet()) {
    prefix.push_back(a);
    enumerate_model(mu, length, budget, prefix, head, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Description> enumerate_descriptions(const ComplexityEstimator& est,
                                                std::uint64_t length_cap, std::uint64_t stage) {
  if (length_cap > 24) throw Error(ErrorKind::IndexOutOfRange, "length cap above 24");
  std::vector<Description> out;
  const auto& alphabet = est.alphabet();
  const std::uint64_t width = symbol_width(alphabet.size());
  const auto& schemes = est.schemes();

  if (schemes.literal) {
    if (length_cap >= 2) out.push_back({tag_bits(Scheme::Empty), Scheme::Empty, {}});
    for (std::uint64_t len = 1; est.literal_length(len) <= length_cap; ++len) {
      // Odometer over alphabet^len.
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        Description d{tag_bits(Scheme::Literal), Scheme::Literal, {}};
        append(d.bits, elias_gamma(len));
        for (std::size_t idx : digits) {
          append(d.bits, symbol_bits(idx, width));
          d.denotes.push_back(alphabet[idx]);
        }
        out.push_back(std::move(d));
        std::size_t pos = len;
        while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  if (schemes.run && stage >= static_cast<unsigned>(Scheme::Run)) {
    for (std::uint64_t len = 1; est.run_length(len) <= length_cap; ++len) {
      for (std::size_t idx = 0; idx < alphabet.size(); ++idx) {
        Description d{tag_bits(Scheme::Run), Scheme::Run, Word(len, alphabet[idx])};
        append(d.bits, elias_gamma(len));
        append(d.bits, symbol_bits(idx, width));
        out.push_back(std::move(d));
      }
    }
  }
  if (schemes.model && est.models() && stage >= static_cast<unsigned>(Scheme::Model)) {
    const MeasureList& models = *est.models();
    for (std::size_t i = 1; i <= models.scan_bound(stage); ++i) {
      if (2 + elias_gamma_length(i) + 1 + 1 > length_cap) break;
      const MeasureHypothesis mu = models.get(i);
      for (std::uint64_t len = 1;; ++len) {
        const std::uint64_t fixed = 2 + elias_gamma_length(i) + elias_gamma_length(len);
        if (fixed + 1 > length_cap) break;
        std::vector<bool> head = tag_bits(Scheme::Model);
        append(head, elias_gamma(i));
        append(head, elias_gamma(len));
        Word prefix;
        enumerate_model(mu, len, static_cast<std::int64_t>(length_cap - fixed), prefix, head, out);
      }
    }
  }
  return out;
}

Rational kraft_audit(const ComplexityEstimator& est, std::uint64_t length_cap,
                     std::uint64_t stage) {
  std::vector<Description> all = enumerate_descriptions(est, length_cap, stage);
  std::sort(all.begin(), all.end(),
            [](const Description& a, const Description& b) { return a.bits < b.bits; });
  // In lexicographic order a codeword that prefixes another sorts directly
  // before some codeword it prefixes, so adjacent checks suffice.
  for (std::size_t k = 1; k < all.size(); ++k) {
    const auto& a = all[k - 1].bits;
    const auto& b = all[k].bits;
    if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) {
      throw Error(ErrorKind::SingularSystem, "description set is not prefix-free");
    }
  }
  Rational total = 0;
  for (const auto& d : all) total += pow2(-static_cast<int>(d.bits.size()));
  return total;
}

}  // namespace probid
