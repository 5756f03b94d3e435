#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/rational.hpp"
#include "probid/symbol.hpp"

namespace probid {

// Finite parameter records that rebuild a hypothesis. In the config file each
// is a JSON object tagged by "family"; rationals are "num/den" strings.

struct FinitePmfSpec {
  std::vector<std::pair<Symbol, Rational>> probs;
  bool operator==(const FinitePmfSpec&) const = default;
};

struct SimplePmfSpec {
  std::string term;
  std::size_t n = 0;
  bool operator==(const SimplePmfSpec&) const = default;
};

struct GeometricPmfSpec {
  bool operator==(const GeometricPmfSpec&) const = default;
};

struct ChainSpec {
  std::vector<Symbol> states;
  RationalMatrix rows;
  bool operator==(const ChainSpec&) const = default;
};

struct MuKSpec {
  std::uint64_t k = 1;
  Symbol a = 1;
  bool operator==(const MuKSpec&) const = default;
};

struct IidMeasureSpec {
  std::variant<FinitePmfSpec, SimplePmfSpec> pmf;
  bool operator==(const IidMeasureSpec&) const = default;
};

struct ConstantMeasureSpec {
  Symbol symbol = 1;
  std::vector<Symbol> alphabet;
  bool operator==(const ConstantMeasureSpec&) const = default;
};

/// mu0 of the black-swan pair; mu1 is ConstantMeasureSpec{1, {1, 2}}.
struct BlackSwanSpec {
  std::uint64_t n_switch = 1;
  bool operator==(const BlackSwanSpec&) const = default;
};

using HypothesisSpec = std::variant<FinitePmfSpec, SimplePmfSpec, GeometricPmfSpec, ChainSpec,
                                    MuKSpec, IidMeasureSpec, ConstantMeasureSpec, BlackSwanSpec>;

enum class HypothesisKind { Pmf, Markov, Measure };

HypothesisKind kind_of(const HypothesisSpec& spec);
std::string_view to_string(HypothesisKind kind);
std::string family_name(const HypothesisSpec& spec);

/// Errors: ConfigInvalid when the hypothesis spec is of another kind, plus the family's
/// own construction errors.
PmfHypothesis build_pmf(const HypothesisSpec& spec);
MarkovHypothesis build_chain(const HypothesisSpec& spec);
MeasureHypothesis build_measure(const HypothesisSpec& spec);

nlohmann::json to_json(const HypothesisSpec& spec);
/// Errors: ConfigInvalid with the failing field path, rooted at `path`.
HypothesisSpec spec_from_json(const nlohmann::json& j, const std::string& path = "spec");

}  // namespace probid
