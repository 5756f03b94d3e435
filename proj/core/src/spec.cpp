#include "probid/spec.hpp"

#include <nlohmann/json.hpp>

#include "probid/error.hpp"

namespace probid {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& path) { throw Error(ErrorKind::ConfigInvalid, path); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) invalid(path + "." + key);
  return j.at(key);
}

std::uint64_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) invalid(path);
  return j.get<std::uint64_t>();
}

Rational as_rational(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const Error&) {
  }
  invalid(path);
}

std::vector<Symbol> as_symbols(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path);
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_count(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json rational_json(const Rational& r) { return r.str(); }

json pmf_json(const FinitePmfSpec& s) {
  json probs = json::array();
  for (const auto& [symbol, p] : s.probs) probs.push_back(json::array({symbol, rational_json(p)}));
  return json{{"family", "finite"}, {"probs", probs}};
}

json pmf_json(const SimplePmfSpec& s) {
  return json{{"family", "simple"}, {"term", s.term}, {"n", s.n}};
}

FinitePmfSpec finite_from_json(const json& j, const std::string& path) {
  const json& probs = field(j, "probs", path);
  if (!probs.is_array()) invalid(path + ".probs");
  FinitePmfSpec spec;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::string item = path + ".probs[" + std::to_string(i) + "]";
    if (!probs[i].is_array() || probs[i].size() != 2) invalid(item);
    spec.probs.emplace_back(as_count(probs[i][0], item + "[0]"),
                            as_rational(probs[i][1], item + "[1]"));
  }
  return spec;
}

SimplePmfSpec simple_from_json(const json& j, const std::string& path) {
  const json& term = field(j, "term", path);
  if (!term.is_string()) invalid(path + ".term");
  return SimplePmfSpec{term.get<std::string>(),
                       static_cast<std::size_t>(as_count(field(j, "n", path), path + ".n"))};
}

}  // namespace

HypothesisKind kind_of(const HypothesisSpec& spec) {
  return std::visit(Overloaded{
                        [](const FinitePmfSpec&) { return HypothesisKind::Pmf; },
                        [](const SimplePmfSpec&) { return HypothesisKind::Pmf; },
                        [](const GeometricPmfSpec&) { return HypothesisKind::Pmf; },
                        [](const ChainSpec&) { return HypothesisKind::Markov; },
                        [](const auto&) { return HypothesisKind::Measure; },
                    },
                    spec);
}

std::string_view to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::Pmf:
      return "pmf";
    case HypothesisKind::Markov:
      return "markov";
    case HypothesisKind::Measure:
      return "measure";
  }
  return "?";
}

std::string family_name(const HypothesisSpec& spec) {
  return to_json(spec).at("family").get<std::string>();
}

PmfHypothesis build_pmf(const HypothesisSpec& spec) {
  return std::visit(
      Overloaded{
          [](const FinitePmfSpec& s) { return make_finite_pmf(s.probs); },
          [](const SimplePmfSpec& s) { return make_simple_pmf(s.term, s.n); },
          [](const GeometricPmfSpec&) { return make_geometric_pmf(); },
          [&](const auto&) -> PmfHypothesis {
            throw Error(ErrorKind::ConfigInvalid, "family " + family_name(spec) + " is not a pmf");
          },
      },
      spec);
}

MarkovHypothesis build_chain(const HypothesisSpec& spec) {
  if (const auto* s = std::get_if<ChainSpec>(&spec)) return MarkovHypothesis(s->states, s->rows);
  throw Error(ErrorKind::ConfigInvalid, "family " + family_name(spec) + " is not a chain");
}

MeasureHypothesis build_measure(const HypothesisSpec& spec) {
  return std::visit(
      Overloaded{
          [](const MuKSpec& s) { return make_mu_k(s.k, s.a); },
          [](const IidMeasureSpec& s) {
            return make_iid_measure(std::visit(
                [](const auto& p) { return build_pmf(HypothesisSpec{p}); }, s.pmf));
          },
          [](const ConstantMeasureSpec& s) { return make_constant_measure(s.symbol, s.alphabet); },
          [](const BlackSwanSpec& s) { return make_black_swan_mu0(s.n_switch); },
          [&](const auto&) -> MeasureHypothesis {
            throw Error(ErrorKind::ConfigInvalid,
                        "family " + family_name(spec) + " is not a measure");
          },
      },
      spec);
}

json to_json(const HypothesisSpec& spec) {
  return std::visit(
      Overloaded{
          [](const FinitePmfSpec& s) { return pmf_json(s); },
          [](const SimplePmfSpec& s) { return pmf_json(s); },
          [](const GeometricPmfSpec&) { return json{{"family", "geometric"}}; },
          [](const ChainSpec& s) {
            json rows = json::array();
            for (const auto& row : s.rows) {
              json r = json::array();
              for (const auto& p : row) r.push_back(rational_json(p));
              rows.push_back(r);
            }
            return json{{"family", "chain"}, {"states", s.states}, {"rows", rows}};
          },
          [](const MuKSpec& s) { return json{{"family", "mu_k"}, {"k", s.k}, {"a", s.a}}; },
          [](const IidMeasureSpec& s) {
            return json{{"family", "iid"},
                        {"pmf", std::visit([](const auto& p) { return pmf_json(p); }, s.pmf)}};
          },
          [](const ConstantMeasureSpec& s) {
            return json{{"family", "constant"}, {"symbol", s.symbol}, {"alphabet", s.alphabet}};
          },
          [](const BlackSwanSpec& s) {
            return json{{"family", "black_swan"}, {"n_switch", s.n_switch}};
          },
      },
      spec);
}

HypothesisSpec spec_from_json(const json& j, const std::string& path) {
  const json& family_field = field(j, "family", path);
  if (!family_field.is_string()) invalid(path + ".family");
  const std::string family = family_field.get<std::string>();

  if (family == "finite") return finite_from_json(j, path);
  if (family == "simple") return simple_from_json(j, path);
  if (family == "geometric") return GeometricPmfSpec{};
  if (family == "chain") {
    ChainSpec spec;
    spec.states = as_symbols(field(j, "states", path), path + ".states");
    const json& rows = field(j, "rows", path);
    if (!rows.is_array()) invalid(path + ".rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_path = path + ".rows[" + std::to_string(i) + "]";
      if (!rows[i].is_array()) invalid(row_path);
      std::vector<Rational> row;
      for (std::size_t c = 0; c < rows[i].size(); ++c) {
        row.push_back(as_rational(rows[i][c], row_path + "[" + std::to_string(c) + "]"));
      }
      spec.rows.push_back(std::move(row));
    }
    return spec;
  }
  if (family == "mu_k") {
    return MuKSpec{as_count(field(j, "k", path), path + ".k"),
                   as_count(field(j, "a", path), path + ".a")};
  }
  if (family == "iid") {
    const std::string pmf_path = path + ".pmf";
    const json& pmf = field(j, "pmf", path);
    const json& pmf_family = field(pmf, "family", pmf_path);
    if (pmf_family == "finite") return IidMeasureSpec{finite_from_json(pmf, pmf_path)};
    if (pmf_family == "simple") return IidMeasureSpec{simple_from_json(pmf, pmf_path)};
    invalid(pmf_path + ".family");
  }
  if (family == "constant") {
    return ConstantMeasureSpec{as_count(field(j, "symbol", path), path + ".symbol"),
                               as_symbols(field(j, "alphabet", path), path + ".alphabet")};
  }
  if (family == "black_swan") {
    return BlackSwanSpec{as_count(field(j, "n_switch", path), path + ".n_switch")};
  }
  invalid(path + ".family");
}

}  // namespace probid
