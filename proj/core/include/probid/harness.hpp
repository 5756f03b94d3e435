#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probid/config.hpp"
#include "probid/guess_trace.hpp"
#include "probid/predict.hpp"

namespace probid {

struct RunRecord {
  std::uint64_t run_id = 0;
  std::uint64_t seed = 0;
  GuessTrace trace;
  /// Set when a target is declared: the final guess denotes the same
  /// hypothesis as the target's least equal index.
  std::optional<bool> correct;
};

struct Summary {
  std::size_t runs = 0;
  std::size_t converged = 0;
  std::size_t judged = 0;  // runs with a correct flag
  std::size_t correct = 0;
  std::optional<std::uint64_t> median_converged_at;  // lower median

  double fraction_converged() const;
  /// Over judged runs; 0 when none is judged.
  double fraction_correct() const;
};

/// Errors: EmptyInput.
Summary summarize(std::span<const RunRecord> records);

struct ExperimentResult {
  std::vector<RunRecord> records;  // sorted by run_id
  std::optional<Summary> summary;  // absent in demo mode
  std::optional<BlackSwanReport> demo;
};

/// One run per seed on up to `jobs` threads (0 means cfg.jobs). The result
/// does not depend on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned jobs = 0);

std::string checkpoints_csv(std::span<const RunRecord> records);
std::string summary_csv(std::span<const RunRecord> records);
std::string aggregate_csv(const Summary& summary);
/// gnuplot script plotting guess against n for every run.
std::string plot_script();

/// Writes to a sibling temporary file and renames it over `file`.
/// Errors: IoError.
void write_atomic(const std::filesystem::path& file, const std::string& content);

/// checkpoints.csv, summary.csv and aggregate.csv (demo.txt and demo.csv in
/// demo mode), plus plot.gp when asked. Errors: IoError.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir,
                   bool plot = false);

}  // namespace probid
