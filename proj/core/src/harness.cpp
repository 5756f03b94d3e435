#include "probid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "probid/error.hpp"
#include "probid/iid_identify.hpp"
#include "probid/markov_identify.hpp"
#include "probid/measure_identify.hpp"

namespace probid {

namespace {

std::uint64_t guess_code(const Guess& g) { return g.value_or(0); }

template <class H>
std::optional<bool> judge(const HypothesisList<H>& list, std::size_t target_index, const Guess& guess) {
  const H target = list.get(target_index);
  const auto expected = minimal_equal_index(list, target, target_index);
  return guess.has_value() && guess == expected;
}

// Everything shared read-only by the runs of one experiment.
struct Prepared {
  std::optional<PmfList> pmfs;
  std::optional<ChainList> chains;
  std::optional<MeasureInterleaved> measures;
  std::optional<ComplexityEstimator> estimator;
};

Prepared prepare(const ExperimentConfig& cfg) {
  Prepared p;
  switch (cfg.mode) {
    case Mode::Iid:
      p.pmfs = make_pmf_list(cfg.hypotheses);
      break;
    case Mode::Markov:
      p.chains = make_chain_list(cfg.hypotheses);
      break;
    case Mode::Measure:
      p.measures.emplace(make_measure_list(cfg.hypotheses));
      p.estimator = make_estimator(cfg.estimator, p.measures->inner());
      break;
    case Mode::Demo:
      break;
  }
  return p;
}

RunRecord run_one(const ExperimentConfig& cfg, const Prepared& p, std::uint64_t run_id) {
  RunRecord r;
  r.run_id = run_id;
  r.seed = cfg.seeds[run_id];
  switch (cfg.mode) {
    case Mode::Iid: {
      const std::size_t t = *cfg.target_index;
      r.trace = identify_stream(*p.pmfs, p.pmfs->get(t), r.seed, cfg.n_max, cfg.stride);
      r.correct = judge(*p.pmfs, t, r.trace.final_guess());
      break;
    }
    case Mode::Markov: {
      const std::size_t t = *cfg.target_index;
      r.trace = identify_chain_stream(*p.chains, p.chains->get(t), r.seed, cfg.n_max, cfg.stride);
      r.correct = judge(*p.chains, t, r.trace.final_guess());
      break;
    }
    case Mode::Measure: {
      if (cfg.sequence) {
        r.trace = identify_measure_stream(*p.measures, *cfg.sequence, cfg.n_max, cfg.stride, *p.estimator,
                                          cfg.estimator.stage_multiplier);
      } else {
        const MeasureHypothesis source = p.measures->inner().get(*cfg.target_index);
        r.trace = identify_measure_stream(*p.measures, source, r.seed, cfg.n_max, cfg.stride,
                                          *p.estimator, cfg.estimator.stage_multiplier);
      }
      if (cfg.target_index) {
        const auto guess = r.trace.final_guess();
        const auto base = guess ? p.measures->base_index(*guess) : std::nullopt;
        r.correct = base.has_value() &&
                    p.measures->inner().get(*base).canonical_key() ==
                        p.measures->inner().get(*cfg.target_index).canonical_key();
      }
      break;
    }
    case Mode::Demo:
      break;
  }
  return r;
}

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double Summary::fraction_converged() const {
  return runs == 0 ? 0.0 : static_cast<double>(converged) / static_cast<double>(runs);
}

double Summary::fraction_correct() const {
  return judged == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(judged);
}

Summary summarize(std::span<const RunRecord> records) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no run records");
  Summary s;
  s.runs = records.size();
  std::vector<std::uint64_t> times;
  for (const auto& r : records) {
    if (const auto c = r.trace.converged_at()) times.push_back(*c);
    if (r.correct) {
      ++s.judged;
      if (*r.correct) ++s.correct;
    }
  }
  s.converged = times.size();
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    s.median_converged_at = times[(times.size() - 1) / 2];
  }
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned jobs) {
  ExperimentResult result;
  if (cfg.mode == Mode::Demo) {
    result.demo = black_swan_demo(cfg.n_switch);
    return result;
  }
  const Prepared prepared = prepare(cfg);
  const std::size_t runs = cfg.seeds.size();
  result.records.resize(runs);
  std::vector<std::exception_ptr> failures(runs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < runs;) {
      try {
        result.records[k] = run_one(cfg, prepared, k);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(jobs == 0 ? cfg.jobs : jobs, runs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  result.summary = summarize(result.records);
  return result;
}

std::string checkpoints_csv(std::span<const RunRecord> records) {
  std::ostringstream out;
  out << "run_id,seed,n,guess,changed\n";
  for (const auto& r : records) {
    std::optional<Guess> previous;
    for (const auto& c : r.trace.checkpoints()) {
      const bool changed = previous && *previous != c.guess;
      out << r.run_id << ',' << r.seed << ',' << c.n << ',' << guess_code(c.guess) << ','
          << (changed ? 1 : 0) << '\n';
      previous = c.guess;
    }
  }
  return out.str();
}

std::string summary_csv(std::span<const RunRecord> records) {
  std::ostringstream out;
  out << "run_id,seed,final_guess,converged_at,correct\n";
  for (const auto& r : records) {
    out << r.run_id << ',' << r.seed << ',' << guess_code(r.trace.final_guess()) << ',';
    if (const auto c = r.trace.converged_at()) out << *c;
    out << ',';
    if (r.correct) out << (*r.correct ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

std::string aggregate_csv(const Summary& s) {
  std::ostringstream out;
  out << "runs,converged,fraction_converged,judged,correct,fraction_correct,median_converged_at\n";
  out << s.runs << ',' << s.converged << ',' << decimal(s.fraction_converged()) << ',' << s.judged
      << ',' << s.correct << ',' << decimal(s.fraction_correct()) << ',';
  if (s.median_converged_at) out << *s.median_converged_at;
  out << '\n';
  return out.str();
}

std::string plot_script() {
  return "# gnuplot -p plot.gp\n"
         "set datafile separator ','\n"
         "set key off\n"
         "set xlabel 'n'\n"
         "set ylabel 'guess (0 = undecided)'\n"
         "stats 'checkpoints.csv' using 1 skip 1 nooutput\n"
         "plot for [r=0:int(STATS_max)] 'checkpoints.csv' skip 1 "
         "using ($1 == r ? $3 : 1/0):4 with steps\n";
}

void write_atomic(const std::filesystem::path& file, const std::string& content) {
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::IoError, "cannot rename onto " + file.string());
  }
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir, bool plot) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string());
  if (result.demo) {
    write_atomic(dir / "demo.txt", result.demo->text);
    write_atomic(dir / "demo.csv", result.demo->csv);
    return;
  }
  write_atomic(dir / "checkpoints.csv", checkpoints_csv(result.records));
  write_atomic(dir / "summary.csv", summary_csv(result.records));
  if (result.summary) write_atomic(dir / "aggregate.csv", aggregate_csv(*result.summary));
  if (plot) write_atomic(dir / "plot.gp", plot_script());
}

}  // namespace probid
