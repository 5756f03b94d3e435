#include "probid/measure_identify.hpp"

#include "probid/bracket.hpp"
#include "probid/error.hpp"
#include "probid/sampling.hpp"

namespace probid {

bool Sigma::below(const Rational& bound) const {
  switch (kind) {
    case Kind::MinusInfinity:
      return true;
    case Kind::PlusInfinity:
      return false;
    case Kind::Finite:
      break;
  }
  return value < bound;
}

std::string Sigma::str() const {
  switch (kind) {
    case Kind::MinusInfinity:
      return "-inf";
    case Kind::PlusInfinity:
      return "inf";
    case Kind::Finite:
      break;
  }
  return value.str();
}

bool operator<(const Sigma& a, const Sigma& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.kind == Sigma::Kind::Finite && a.value < b.value;
}

bool operator==(const Sigma& a, const Sigma& b) {
  return a.kind == b.kind && (a.kind != Sigma::Kind::Finite || a.value == b.value);
}

Rational log2_inverse_upper(const Rational& m) {
  if (m.sign() <= 0 || Rational(1) < m) throw Error(ErrorKind::ZeroMassPrefix, "mass outside (0, 1]");
  return log2_bracket(Rational(1) / m).hi;
}

Sigma sigma_stage(const MeasureHypothesis& mu, std::span<const Symbol> x, std::size_t j,
                  std::uint64_t n, const ComplexityEstimator& est) {
  if (j > x.size()) throw Error(ErrorKind::IndexOutOfRange, "prefix length past sequence");
  const auto prefix = x.first(j);
  const Rational mass = mu.eval(prefix);
  if (mass.sign() <= 0) return Sigma::plus_infinity();
  const auto k = est.khat(prefix, n);
  if (!k) return Sigma::minus_infinity();
  return Sigma::finite(log2_inverse_upper(mass) - Rational(static_cast<std::int64_t>(*k)));
}

MeasureIdentifier::MeasureIdentifier(const MeasureInterleaved& list, std::span<const Symbol> x,
                                     const ComplexityEstimator& est, std::uint64_t max_n,
                                     std::uint64_t stage_multiplier)
    : list_(list),
      x_(x.begin(), x.end()),
      max_n_(std::min<std::uint64_t>(max_n, x.size())),
      multiplier_(stage_multiplier),
      costs_(est, x.first(max_n_), std::max<std::uint64_t>(max_n_, 1) * stage_multiplier) {
  if (stage_multiplier == 0) throw Error(ErrorKind::IndexOutOfRange, "stage multiplier must be positive");
}

const std::vector<std::optional<Rational>>& MeasureIdentifier::logs(std::size_t base) {
  if (logs_.size() < base) logs_.resize(base);
  auto& slot = logs_[base - 1];
  if (!slot) {
    const MeasureHypothesis mu = list_.inner().get(base);
    const auto masses = mu.prefix_masses(std::span<const Symbol>(x_).first(max_n_));
    std::vector<std::optional<Rational>> row;
    row.reserve(max_n_);
    for (std::size_t j = 1; j <= max_n_; ++j) {
      if (masses[j].sign() <= 0) {
        // Every extension of a null prefix is null too.
        row.resize(max_n_);
        break;
      }
      row.push_back(log2_inverse_upper(masses[j]));
    }
    slot = std::move(row);
  }
  return *slot;
}

Sigma MeasureIdentifier::max_sigma(std::size_t base, std::uint64_t n) {
  if (n == 0 || n > max_n_) throw Error(ErrorKind::IndexOutOfRange, "step size outside table");
  const auto& row = logs(base);
  std::optional<Sigma> best;
  for (std::size_t j = 1; j <= n; ++j) {
    if (!row[j - 1]) return Sigma::plus_infinity();
    const auto k = costs_.khat(j, n * multiplier_);
    Sigma s = k ? Sigma::finite(*row[j - 1] - Rational(static_cast<std::int64_t>(*k)))
                : Sigma::minus_infinity();
    if (!best || *best < s) best = std::move(s);
  }
  return *best;
}

std::size_t MeasureIdentifier::step(std::uint64_t n) {
  if (n == 0 || n > max_n_) throw Error(ErrorKind::IndexOutOfRange, "step size outside table");
  const auto size = list_.inner().size();
  std::optional<std::uint64_t> answer;
  // Base b sits at positions d(d-1)/2 + b for d >= b; the first is b(b+1)/2.
  for (std::size_t b = 1; b * (b + 1) / 2 <= n; ++b) {
    if (size && b > *size) break;
    if (answer && b * (b + 1) / 2 >= *answer) break;
    const Sigma m = max_sigma(b, n);
    if (m.kind == Sigma::Kind::PlusInfinity) continue;
    for (std::uint64_t d = b;; ++d) {
      const std::uint64_t pos = d * (d - 1) / 2 + b;
      if (pos > n || (answer && pos >= *answer)) break;
      if (m.below(Rational(static_cast<std::int64_t>(pos)))) {
        answer = pos;
        break;
      }
    }
  }
  return answer.value_or(1);
}

std::size_t identify_measure_step(const MeasureInterleaved& list, std::span<const Symbol> x,
                                  std::uint64_t n, const ComplexityEstimator& est) {
  if (n == 0 || x.size() < n) throw Error(ErrorKind::IndexOutOfRange, "need 1 <= n <= |x|");
  return MeasureIdentifier(list, x, est, n).step(n);
}

GuessTrace identify_measure_stream(const MeasureInterleaved& list, std::span<const Symbol> x,
                                   std::uint64_t n_max, std::uint64_t stride,
                                   const ComplexityEstimator& est, std::uint64_t stage_multiplier) {
  GuessTrace trace;
  const auto schedule = checkpoint_schedule(n_max, stride);
  if (schedule.empty()) return trace;
  if (x.size() < schedule.back()) throw Error(ErrorKind::IndexOutOfRange, "sequence shorter than n_max");
  MeasureIdentifier id(list, x, est, schedule.back(), stage_multiplier);
  for (std::uint64_t n : schedule) trace.record(n, id.step(n));
  return trace;
}

GuessTrace identify_measure_stream(const MeasureInterleaved& list, const MeasureHypothesis& source,
                                   std::uint64_t seed, std::uint64_t n_max, std::uint64_t stride,
                                   const ComplexityEstimator& est, std::uint64_t stage_multiplier) {
  if (checkpoint_schedule(n_max, stride).empty()) return {};
  const SamplePrefix sample = draw_from_measure(source, seed, n_max);
  return identify_measure_stream(list, sample.symbols, n_max, stride, est, stage_multiplier);
}

}  // namespace probid
