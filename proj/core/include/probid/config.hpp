#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "probid/complexity.hpp"
#include "probid/hypothesis_list.hpp"
#include "probid/spec.hpp"
#include "probid/symbol.hpp"

namespace probid {

enum class Mode { Iid, Markov, Measure, Demo };

std::string_view to_string(Mode mode);

/// Either explicit specs (inline items or an expanded parameter grid) or a
/// named generator for an infinite list.
///
///   {"items": [spec, ...]}
///   {"family": "simple", "grid": {"term": ["j", "1"], "n": [2, 3]}}
///   {"generator": "simple_linear", "n": 4}       element i: f(j) = j + i - 1
///   {"generator": "mu_k", "a": 1}                element i: mu_k with k = i + a
struct ListDecl {
  std::vector<HypothesisSpec> items;
  std::string generator;  // empty for explicit lists
  std::uint64_t generator_param = 0;

  bool generated() const { return !generator.empty(); }
};

struct EstimatorConfig {
  SchemeSet schemes;
  std::vector<Symbol> alphabet;  // empty: union of the list's alphabets
  std::uint64_t stage_multiplier = 1;  // estimator stage at step n
};

struct ExperimentConfig {
  Mode mode = Mode::Iid;
  ListDecl hypotheses;
  std::optional<std::size_t> target_index;
  std::uint64_t n_max = 0;
  std::uint64_t stride = 100;
  std::vector<std::uint64_t> seeds;
  EstimatorConfig estimator;
  std::optional<Word> sequence;  // measure mode: fixed input instead of sampling
  std::uint64_t n_switch = 5;    // demo mode
  std::filesystem::path output = "probid-out";
  unsigned jobs = 1;
};

/// Errors: ConfigInvalid with the offending field path as the message.
ExperimentConfig parse_config(const nlohmann::json& j);
/// Errors: IoError when unreadable, ConfigInvalid otherwise (a syntax error
/// reports the path "<document>").
ExperimentConfig load_config(const std::filesystem::path& file);

PmfList make_pmf_list(const ListDecl& decl);
ChainList make_chain_list(const ListDecl& decl);
MeasureList make_measure_list(const ListDecl& decl);

/// Literal alphabet for measure mode: the configured one, or the sorted
/// union of the alphabets of the first min(|list|, 64) elements.
ComplexityEstimator make_estimator(const EstimatorConfig& cfg, const MeasureList& list);

}  // namespace probid
