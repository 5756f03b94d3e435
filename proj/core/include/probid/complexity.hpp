#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probid/hypothesis_list.hpp"
#include "probid/measure.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

/// Elias gamma code length, 2 floor(log2 k) + 1 bits for k >= 1.
std::uint64_t elias_gamma_length(std::uint64_t k);
/// The gamma codeword itself, most significant bit first.
std::vector<bool> elias_gamma(std::uint64_t k);

/// Bits per literal symbol, ceil(log2 |L|) (0 for a one-letter alphabet).
std::uint64_t symbol_width(std::size_t alphabet_size);

/// Two-bit tags of the description language. A tag's index is its value, so
/// at stage n only tags with value <= n compete. The empty string is the bare
/// tag 11.
enum class Scheme : unsigned { Literal = 0, Run = 1, Model = 2, Empty = 3 };

struct SchemeSet {
  bool literal = true;  // also enables the empty-string tag
  bool run = true;
  bool model = true;
};

/// Stage-monotone, Kraft-compliant upper bound on prefix complexity, in bits.
///
///   literal:  00 gamma(|x|) then |x| symbols of symbol_width bits
///   run:      01 gamma(|x|) then one symbol   (x = a^|x|)
///   model:    10 gamma(i) gamma(|x|) then a Shannon-Fano-Elias codeword of
///             ceil(log2 1/mu_i(x)) + 1 bits  (i <= stage, mu_i(x) > 0)
///   empty:    11
///
/// All descriptions together form a prefix code, so their Kraft sum is at
/// most 1, and enlarging the stage only adds descriptions.
class ComplexityEstimator {
 public:
  ComplexityEstimator(std::vector<Symbol> alphabet, SchemeSet schemes = {},
                      std::optional<MeasureList> models = std::nullopt);

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  const SchemeSet& schemes() const { return schemes_; }
  const std::optional<MeasureList>& models() const { return models_; }

  /// K-hat at the given stage; nullopt when no enabled scheme describes x.
  /// Symbols outside the alphabet can only be described by a model.
  std::optional<std::uint64_t> khat(std::span<const Symbol> x, std::uint64_t stage) const;

  /// Model-scheme length under model i given mu_i(x) > 0.
  static std::uint64_t model_length(std::size_t i, std::uint64_t length, const Rational& mass);

  /// Literal length of an |x|-symbol string (the empty string costs 2).
  std::uint64_t literal_length(std::uint64_t length) const;
  /// Run length of a^length.
  std::uint64_t run_length(std::uint64_t length) const;

 private:
  std::vector<Symbol> alphabet_;
  SchemeSet schemes_;
  std::optional<MeasureList> models_;
};

/// Stage-independent description costs for every prefix x_1..x_j of one
/// string, so that K-hat of all prefixes at many stages is cheap. Stages up
/// to max_stage are supported.
class PrefixCosts {
 public:
  PrefixCosts(const ComplexityEstimator& est, std::span<const Symbol> x, std::uint64_t max_stage);

  std::size_t length() const { return literal_.size() - 1; }
  /// K-hat of x_1..x_j at the given stage. Errors: IndexOutOfRange for
  /// j > length() or a stage outside [1, max_stage].
  std::optional<std::uint64_t> khat(std::size_t j, std::uint64_t stage) const;

 private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  std::uint64_t max_stage_;
  std::vector<std::uint64_t> literal_;             // index j, kNone if unavailable
  std::vector<std::uint64_t> run_;                 // index j
  std::vector<std::vector<std::uint64_t>> model_;  // [i-1][j]
};

/// One decodable description: its bits and the string it denotes.
struct Description {
  std::vector<bool> bits;
  Scheme scheme;
  Word denotes;
};

/// All descriptions of at most length_cap bits available at `stage`.
/// Model descriptions use models 1..min(stage, |models|).
std::vector<Description> enumerate_descriptions(const ComplexityEstimator& est,
                                                std::uint64_t length_cap, std::uint64_t stage);

/// Sum of 2^-|d| over enumerate_descriptions(est, length_cap, stage). Also
/// verifies the enumerated set is prefix-free; a violation throws
/// Error(SingularSystem) since the Kraft bound would no longer be meaningful.
/// length_cap <= 24.
Rational kraft_audit(const ComplexityEstimator& est, std::uint64_t length_cap,
                     std::uint64_t stage = 1u << 20);

/// Shannon-Fano-Elias codeword of x among strings of length |x| under mu, in
/// alphabet order: the first ceil(log2 1/mu(x)) + 1 bits of
/// sum_{y < x} mu(y) + mu(x)/2.
std::vector<bool> sfe_codeword(const MeasureHypothesis& mu, std::span<const Symbol> x);

}  // namespace probid
