#include "probid/hypothesis_list.hpp"

#include <cmath>

namespace probid {

template <>
PmfHypothesis build<PmfHypothesis>(const HypothesisSpec& spec) {
  return build_pmf(spec);
}
template <>
MarkovHypothesis build<MarkovHypothesis>(const HypothesisSpec& spec) {
  return build_chain(spec);
}
template <>
MeasureHypothesis build<MeasureHypothesis>(const HypothesisSpec& spec) {
  return build_measure(spec);
}

template <class H>
HypothesisList<H>::HypothesisList(std::vector<HypothesisSpec> specs)
    : specs_(std::move(specs)), rule_("explicit") {
  built_.reserve(specs_.size());
  for (const auto& s : specs_) built_.push_back(build<H>(s));
}

template <class H>
HypothesisList<H>::HypothesisList(Generator generator, std::string rule)
    : generator_(std::move(generator)), rule_(std::move(rule)) {}

template <class H>
std::optional<std::size_t> HypothesisList<H>::size() const {
  if (generator_) return std::nullopt;
  return specs_.size();
}

template <class H>
void HypothesisList<H>::check_index(std::size_t i) const {
  if (i == 0 || (!generator_ && i > specs_.size())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i) + " outside list of length " +
                    (generator_ ? std::string("infinity") : std::to_string(specs_.size())));
  }
}

template <class H>
H HypothesisList<H>::get(std::size_t i) const {
  check_index(i);
  if (generator_) return build<H>(generator_(i));
  return built_[i - 1];
}

template <class H>
HypothesisSpec HypothesisList<H>::spec(std::size_t i) const {
  check_index(i);
  if (generator_) return generator_(i);
  return specs_[i - 1];
}

template <class H>
std::size_t HypothesisList<H>::scan_bound(std::uint64_t n) const {
  if (generator_) return static_cast<std::size_t>(n);
  return static_cast<std::size_t>(std::min<std::uint64_t>(n, specs_.size()));
}

std::size_t interleave_decode(std::uint64_t pos) {
  if (pos == 0) throw Error(ErrorKind::IndexOutOfRange, "interleaved positions start at 1");
  // Largest d with d(d-1)/2 < pos, seeded from the floating estimate and fixed up exactly.
  auto tri = [](std::uint64_t d) { return BigInt(d) * (d - 1) / 2; };
  std::uint64_t d = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pos))) / 2.0);
  if (d < 1) d = 1;
  while (tri(d) >= BigInt(pos)) --d;
  while (tri(d + 1) < BigInt(pos)) ++d;
  return static_cast<std::size_t>(pos - static_cast<std::uint64_t>(tri(d)));
}

template <class H>
std::optional<std::size_t> InterleavedList<H>::base_index(std::uint64_t pos) const {
  const std::size_t b = interleave_decode(pos);
  const auto size = inner_.size();
  if (size && b > *size) return std::nullopt;
  return b;
}

template <class H>
std::optional<H> InterleavedList<H>::at(std::uint64_t pos) const {
  const auto b = base_index(pos);
  if (!b) return std::nullopt;
  return inner_.get(*b);
}

template <class H>
std::optional<std::size_t> minimal_equal_index(const HypothesisList<H>& list, const H& target,
                                               std::size_t bound) {
  const std::string key = target.canonical_key();
  const std::size_t limit = list.size() ? std::min(bound, *list.size()) : bound;
  for (std::size_t i = 1; i <= limit; ++i) {
    if (list.get(i).canonical_key() == key) return i;
  }
  return std::nullopt;
}

PmfList simple_linear_list(std::size_t n) {
  return PmfList(
      [n](std::size_t i) -> HypothesisSpec {
        return SimplePmfSpec{"j+" + std::to_string(i - 1), n};
      },
      "simple_linear");
}

template class HypothesisList<PmfHypothesis>;
template class HypothesisList<MarkovHypothesis>;
template class HypothesisList<MeasureHypothesis>;
template class InterleavedList<PmfHypothesis>;
template class InterleavedList<MarkovHypothesis>;
template class InterleavedList<MeasureHypothesis>;

template std::optional<std::size_t> minimal_equal_index(const PmfList&, const PmfHypothesis&,
                                                        std::size_t);
template std::optional<std::size_t> minimal_equal_index(const ChainList&, const MarkovHypothesis&,
                                                        std::size_t);
template std::optional<std::size_t> minimal_equal_index(const MeasureList&,
                                                        const MeasureHypothesis&, std::size_t);

}  // namespace probid
