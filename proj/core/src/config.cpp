#include "probid/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "probid/error.hpp"

namespace probid {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path) { throw Error(ErrorKind::ConfigInvalid, path); }

std::uint64_t as_uint(const json& j, const std::string& path, std::uint64_t min = 0) {
  if (!j.is_number_integer()) invalid(path);
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v < min) invalid(path);
    return v;
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) < min) invalid(path);
  return static_cast<std::uint64_t>(v);
}

Word parse_sequence(const json& j) {
  const auto letters = [](const json& s, const std::string& path) {
    if (!s.is_string()) invalid(path);
    try {
      return word_from_letters(s.get<std::string>());
    } catch (const Error&) {
      invalid(path);
    }
  };
  if (j.is_string()) return letters(j, "sequence");
  if (j.is_array()) {
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) {
      w.push_back(as_uint(j[i], "sequence[" + std::to_string(i) + "]", 1));
    }
    return w;
  }
  if (j.is_object()) {
    if (!j.contains("repeat")) invalid("sequence.repeat");
    if (!j.contains("times")) invalid("sequence.times");
    const Word unit = letters(j["repeat"], "sequence.repeat");
    const std::uint64_t times = as_uint(j["times"], "sequence.times");
    Word w;
    for (std::uint64_t t = 0; t < times; ++t) w.insert(w.end(), unit.begin(), unit.end());
    return w;
  }
  invalid("sequence");
}

// Cartesian product over the grid's keys, last key varying fastest.
std::vector<json> expand_grid(const std::string& family, const json& grid) {
  if (!grid.is_object() || grid.empty()) invalid("hypotheses.grid");
  std::vector<json> out{json{{"family", family}}};
  for (const auto& [key, values] : grid.items()) {
    if (!values.is_array() || values.empty()) invalid("hypotheses.grid." + key);
    std::vector<json> next;
    for (const auto& partial : out) {
      for (const auto& v : values) {
        json extended = partial;
        extended[key] = v;
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

ListDecl parse_list(const json& j) {
  if (!j.is_object()) invalid("hypotheses");
  ListDecl decl;
  if (j.contains("generator")) {
    if (!j["generator"].is_string()) invalid("hypotheses.generator");
    decl.generator = j["generator"].get<std::string>();
    if (decl.generator == "simple_linear") {
      if (!j.contains("n")) invalid("hypotheses.n");
      decl.generator_param = as_uint(j["n"], "hypotheses.n", 1);
    } else if (decl.generator == "mu_k") {
      decl.generator_param = j.contains("a") ? as_uint(j["a"], "hypotheses.a", 1) : 1;
    } else {
      invalid("hypotheses.generator");
    }
    return decl;
  }
  if (j.contains("items")) {
    const json& items = j["items"];
    if (!items.is_array() || items.empty()) invalid("hypotheses.items");
    for (std::size_t i = 0; i < items.size(); ++i) {
      decl.items.push_back(spec_from_json(items[i], "hypotheses.items[" + std::to_string(i) + "]"));
    }
    return decl;
  }
  if (j.contains("family") && j.contains("grid")) {
    if (!j["family"].is_string()) invalid("hypotheses.family");
    const auto specs = expand_grid(j["family"].get<std::string>(), j["grid"]);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      decl.items.push_back(spec_from_json(specs[i], "hypotheses.grid[" + std::to_string(i) + "]"));
    }
    return decl;
  }
  invalid("hypotheses");
}

HypothesisKind kind_for(Mode mode) {
  switch (mode) {
    case Mode::Iid:
      return HypothesisKind::Pmf;
    case Mode::Markov:
      return HypothesisKind::Markov;
    default:
      return HypothesisKind::Measure;
  }
}

std::vector<std::uint64_t> parse_seeds(const json& j) {
  std::vector<std::uint64_t> seeds;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      seeds.push_back(as_uint(j[i], "seeds[" + std::to_string(i) + "]"));
    }
  } else if (j.is_object()) {
    if (!j.contains("count")) invalid("seeds.count");
    const std::uint64_t count = as_uint(j["count"], "seeds.count", 1);
    const std::uint64_t base = j.contains("base") ? as_uint(j["base"], "seeds.base") : 0;
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
  } else {
    invalid("seeds");
  }
  if (seeds.empty()) invalid("seeds");
  return seeds;
}

EstimatorConfig parse_estimator(const json& j) {
  if (!j.is_object()) invalid("estimator");
  EstimatorConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key != "schemes" && key != "alphabet" && key != "stage_multiplier") invalid("estimator." + key);
  }
  if (j.contains("schemes")) {
    const json& s = j["schemes"];
    if (!s.is_array()) invalid("estimator.schemes");
    cfg.schemes = {false, false, false};
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string path = "estimator.schemes[" + std::to_string(i) + "]";
      if (!s[i].is_string()) invalid(path);
      const auto name = s[i].get<std::string>();
      if (name == "literal") {
        cfg.schemes.literal = true;
      } else if (name == "run") {
        cfg.schemes.run = true;
      } else if (name == "model") {
        cfg.schemes.model = true;
      } else {
        invalid(path);
      }
    }
  }
  if (j.contains("stage_multiplier")) {
    cfg.stage_multiplier = as_uint(j["stage_multiplier"], "estimator.stage_multiplier", 1);
  }
  if (j.contains("alphabet")) {
    const json& a = j["alphabet"];
    if (!a.is_array() || a.empty()) invalid("estimator.alphabet");
    for (std::size_t i = 0; i < a.size(); ++i) {
      cfg.alphabet.push_back(as_uint(a[i], "estimator.alphabet[" + std::to_string(i) + "]", 1));
    }
  }
  return cfg;
}

template <class H>
HypothesisList<H> make_list(const ListDecl& decl, HypothesisList<H> (*generated)(const ListDecl&)) {
  if (decl.generated()) return generated(decl);
  return HypothesisList<H>(decl.items);
}

PmfList generated_pmfs(const ListDecl& decl) {
  if (decl.generator != "simple_linear") invalid("hypotheses.generator");
  return simple_linear_list(decl.generator_param);
}

ChainList generated_chains(const ListDecl&) { invalid("hypotheses.generator"); }

MeasureList generated_measures(const ListDecl& decl) {
  if (decl.generator != "mu_k") invalid("hypotheses.generator");
  const std::uint64_t a = decl.generator_param;
  return MeasureList([a](std::size_t i) -> HypothesisSpec { return MuKSpec{i + a, a}; },
                     "mu_k(k = i + " + std::to_string(a) + ", a = " + std::to_string(a) + ")");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Iid:
      return "iid";
    case Mode::Markov:
      return "markov";
    case Mode::Measure:
      return "measure";
    case Mode::Demo:
      return "demo";
  }
  return "?";
}

PmfList make_pmf_list(const ListDecl& decl) { return make_list<PmfHypothesis>(decl, generated_pmfs); }
ChainList make_chain_list(const ListDecl& decl) {
  return make_list<MarkovHypothesis>(decl, generated_chains);
}
MeasureList make_measure_list(const ListDecl& decl) {
  return make_list<MeasureHypothesis>(decl, generated_measures);
}

ComplexityEstimator make_estimator(const EstimatorConfig& cfg, const MeasureList& list) {
  std::vector<Symbol> alphabet = cfg.alphabet;
  if (alphabet.empty()) {
    std::set<Symbol> all;
    for (std::size_t i = 1; i <= list.scan_bound(64); ++i) {
      const auto a = list.get(i).alphabet();
      all.insert(a.begin(), a.end());
    }
    alphabet.assign(all.begin(), all.end());
  }
  return ComplexityEstimator(std::move(alphabet), cfg.schemes, list);
}

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) invalid("<document>");
  static const std::set<std::string> known{"mode",    "hypotheses", "target_index", "n_max",
                                           "checkpoint", "seeds",   "estimator",    "sequence",
                                           "demo",    "output",     "jobs"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) invalid(key);
  }

  ExperimentConfig cfg;
  if (!j.contains("mode") || !j["mode"].is_string()) invalid("mode");
  const auto mode = j["mode"].get<std::string>();
  if (mode == "iid") {
    cfg.mode = Mode::Iid;
  } else if (mode == "markov") {
    cfg.mode = Mode::Markov;
  } else if (mode == "measure") {
    cfg.mode = Mode::Measure;
  } else if (mode == "demo") {
    cfg.mode = Mode::Demo;
  } else {
    invalid("mode");
  }

  if (j.contains("output")) {
    if (!j["output"].is_string() || j["output"].get<std::string>().empty()) invalid("output");
    cfg.output = j["output"].get<std::string>();
  }
  if (j.contains("jobs")) cfg.jobs = static_cast<unsigned>(as_uint(j["jobs"], "jobs", 1));

  if (cfg.mode == Mode::Demo) {
    if (j.contains("demo")) {
      const json& d = j["demo"];
      if (!d.is_object() || !d.contains("n_switch")) invalid("demo.n_switch");
      cfg.n_switch = as_uint(d["n_switch"], "demo.n_switch", 1);
    }
    return cfg;
  }

  if (!j.contains("hypotheses")) invalid("hypotheses");
  cfg.hypotheses = parse_list(j["hypotheses"]);
  const std::string items_path = j["hypotheses"].contains("items") ? "hypotheses.items" : "hypotheses.grid";
  for (std::size_t i = 0; i < cfg.hypotheses.items.size(); ++i) {
    const auto& spec = cfg.hypotheses.items[i];
    const std::string path = items_path + "[" + std::to_string(i) + "]";
    if (kind_of(spec) != kind_for(cfg.mode)) invalid(path + ".family");
    // Build once so construction errors surface as configuration errors.
    try {
      switch (cfg.mode) {
        case Mode::Iid:
          build_pmf(spec);
          break;
        case Mode::Markov:
          build_chain(spec);
          break;
        default:
          build_measure(spec);
          break;
      }
    } catch (const Error&) {
      invalid(path);
    }
  }
  std::optional<std::size_t> size;
  if (!cfg.hypotheses.generated()) size = cfg.hypotheses.items.size();

  if (cfg.mode == Mode::Measure && j.contains("sequence")) cfg.sequence = parse_sequence(j["sequence"]);
  if (j.contains("target_index")) {
    cfg.target_index = as_uint(j["target_index"], "target_index", 1);
    if (size && *cfg.target_index > *size) invalid("target_index");
  } else if (!cfg.sequence) {
    invalid("target_index");
  }

  if (j.contains("n_max")) {
    cfg.n_max = as_uint(j["n_max"], "n_max", 1);
  } else if (cfg.sequence) {
    cfg.n_max = cfg.sequence->size();
  } else {
    invalid("n_max");
  }
  if (cfg.sequence && cfg.n_max > cfg.sequence->size()) invalid("n_max");

  if (j.contains("checkpoint")) {
    const json& c = j["checkpoint"];
    if (!c.is_object() || !c.contains("stride")) invalid("checkpoint.stride");
    cfg.stride = as_uint(c["stride"], "checkpoint.stride", 1);
  }

  cfg.seeds = j.contains("seeds") ? parse_seeds(j["seeds"]) : std::vector<std::uint64_t>{0};
  if (j.contains("estimator")) cfg.estimator = parse_estimator(j["estimator"]);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error&) {
    invalid("<document>");
  }
  return parse_config(j);
}

}  // namespace probid
