#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "probid/config.hpp"
#include "probid/error.hpp"
#include "probid/harness.hpp"
#include "probid/markov_identify.hpp"
#include "probid/predict.hpp"
#include "probid/spec.hpp"

namespace {

int exit_code(const probid::Error& e) {
  switch (e.kind()) {
    case probid::ErrorKind::ConfigInvalid:
      return 2;
    case probid::ErrorKind::IoError:
      return 3;
    default:
      return 1;
  }
}

void report(const probid::Error& e) {
  if (e.kind() == probid::ErrorKind::ConfigInvalid) {
    std::cerr << "probid: invalid configuration at " << e.what() << '\n';
  } else {
    std::cerr << "probid: " << probid::to_string(e.kind()) << ": " << e.what() << '\n';
  }
}

int cmd_run(const std::string& config, unsigned jobs, const std::string& out, bool plot) {
  probid::ExperimentConfig cfg = probid::load_config(config);
  if (!out.empty()) cfg.output = out;
  const auto result = probid::run_experiment(cfg, jobs);
  probid::write_outputs(result, cfg.output, plot);
  if (result.demo) {
    std::cout << result.demo->text;
  } else {
    std::cout << probid::aggregate_csv(*result.summary);
  }
  std::cout << "wrote " << cfg.output.string() << '\n';
  return 0;
}

int cmd_demo(std::uint64_t n_switch) {
  const auto r = probid::black_swan_demo(n_switch);
  std::cout << r.text << '\n' << r.csv;
  return 0;
}

int cmd_stationary(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw probid::Error(probid::ErrorKind::IoError, "cannot read " + file);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error&) {
    throw probid::Error(probid::ErrorKind::ConfigInvalid, "<document>");
  }
  const auto spec = probid::spec_from_json(j, "chain");
  const auto chain = probid::build_chain(spec);
  for (std::size_t k = 0; k < chain.states().size(); ++k) {
    std::cout << chain.states()[k] << ' ' << chain.stationary()[k].str() << '\n';
  }
  return 0;
}

int cmd_validate(const std::string& config) {
  const auto cfg = probid::load_config(config);
  std::cout << "ok: mode " << probid::to_string(cfg.mode) << ", " << cfg.seeds.size() << " seed(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identification in the limit of i.i.d. pmfs, ergodic Markov chains and computable measures"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  unsigned jobs = 0;
  bool plot = false;
  auto* run = app.add_subcommand("run", "Run an experiment and write its CSVs");
  run->add_option("--config", config, "Experiment config (JSON)")->required();
  run->add_option("--jobs", jobs, "Worker threads (default: config value)");
  run->add_option("--out", out, "Output directory (default: config value)");
  run->add_flag("--emit-plot-script", plot, "Also write plot.gp for gnuplot");

  std::uint64_t n_switch = 5;
  auto* demo = app.add_subcommand("demo", "Demonstrations");
  demo->require_subcommand(1);
  auto* swan = demo->add_subcommand("black-swan", "Two measures that agree on a^n and then split");
  swan->add_option("--switch", n_switch, "Switch point")->check(CLI::PositiveNumber);

  std::string chain;
  auto* stat = app.add_subcommand("stationary", "Exact stationary distribution of a chain");
  stat->add_option("--chain", chain, "Chain spec (JSON)")->required();

  std::string validate_config;
  auto* validate = app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("--config", validate_config, "Experiment config (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config, jobs, out, plot);
    if (*swan) return cmd_demo(n_switch);
    if (*stat) return cmd_stationary(chain);
    if (*validate) return cmd_validate(validate_config);
  } catch (const probid::Error& e) {
    report(e);
    return exit_code(e);
  }
  return 1;
}
