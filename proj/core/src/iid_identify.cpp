#include "probid/iid_identify.hpp"

#include "probid/bracket.hpp"
#include "probid/error.hpp"

namespace probid {

std::set<Symbol> observed_support(const SamplePrefix& s) {
  std::set<Symbol> out;
  for (const auto& [symbol, count] : s.counts) {
    if (count > 0) out.insert(symbol);
  }
  return out;
}

std::size_t mass_cutoff(const PmfHypothesis& q, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "mass_cutoff needs n >= 1");
  const Rational size(static_cast<std::int64_t>(n));
  const auto support = q.support_size();
  for (std::size_t m = 0;; ++m) {
    const Rational tail = Rational(1) - q.prefix_mass(m);
    if (tail * tail * size < Rational(1)) return m;
    if (support && m >= *support) return *support;
  }
}

TestResult candidate_test(const PmfHypothesis& q, const SamplePrefix& s) {
  const std::uint64_t n = s.size();
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "candidate_test needs n >= 1");
  const Bracket threshold = tau(n);
  const BigInt size(n);

  const auto passes = [&](Symbol a) {
    const Rational freq(BigInt(s.count(a)), size);
    return cmp_against_bracket(abs(q.eval(a) - freq), threshold) == Position::Below;
  };

  for (const auto& [symbol, count] : s.counts) {
    if (count > 0 && !passes(symbol)) return TestResult::Fail;
  }
  const std::size_t m = mass_cutoff(q, n);
  for (std::size_t j = 1; j <= m; ++j) {
    const Symbol a = q.support_at(j);
    if (s.count(a) == 0 && !passes(a)) return TestResult::Fail;  // observed ones done above
  }
  return TestResult::Pass;
}

Guess identify_step(const PmfList& list, const SamplePrefix& s) {
  const std::size_t bound = list.scan_bound(s.size());
  for (std::size_t i = 1; i <= bound; ++i) {
    if (candidate_test(list.get(i), s) == TestResult::Pass) return i;
  }
  return std::nullopt;
}

GuessTrace identify_stream(const PmfList& list, const PmfHypothesis& target, std::uint64_t seed,
                           std::uint64_t n_max, std::uint64_t stride) {
  GuessTrace trace;
  const auto schedule = checkpoint_schedule(n_max, stride);
  if (schedule.empty()) return trace;
  PmfSampler sampler(target);
  Rng rng(seed);
  SamplePrefix sample;
  sample.symbols.reserve(schedule.back());
  for (std::uint64_t n : schedule) {
    while (sample.size() < n) sample.push(sampler.draw(rng));
    trace.record(n, identify_step(list, sample));
  }
  return trace;
}

}  // namespace probid
