#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "probid/error.hpp"
#include "probid/markov_chain.hpp"
#include "probid/measure.hpp"
#include "probid/pmf.hpp"
#include "probid/spec.hpp"

namespace probid {

/// Indexed c.e. list of hypotheses (1-based): either an explicit finite list
/// of specs, or an infinite list produced by a generator rule. Element i is
/// the same on every call.
template <class H>
class HypothesisList {
 public:
  using Generator = std::function<HypothesisSpec(std::size_t)>;

  /// Builds and validates every element up front.
  explicit HypothesisList(std::vector<HypothesisSpec> specs);
  /// Infinite list; element i is built from generator(i) on demand.
  HypothesisList(Generator generator, std::string rule);

  /// nullopt for generated lists.
  std::optional<std::size_t> size() const;

  /// Errors: IndexOutOfRange for i = 0 or i past the end of a finite list.
  H get(std::size_t i) const;
  HypothesisSpec spec(std::size_t i) const;

  /// min(n, length): the largest index a step at sample size n may inspect.
  std::size_t scan_bound(std::uint64_t n) const;

  const std::string& rule() const { return rule_; }

 private:
  void check_index(std::size_t i) const;

  std::vector<HypothesisSpec> specs_;
  std::vector<H> built_;
  Generator generator_;
  std::string rule_;
};

using PmfList = HypothesisList<PmfHypothesis>;
using ChainList = HypothesisList<MarkovHypothesis>;
using MeasureList = HypothesisList<MeasureHypothesis>;

/// Builds a hypothesis of type H from a spec of the matching kind.
template <class H>
H build(const HypothesisSpec& spec);
template <>
PmfHypothesis build<PmfHypothesis>(const HypothesisSpec& spec);
template <>
MarkovHypothesis build<MarkovHypothesis>(const HypothesisSpec& spec);
template <>
MeasureHypothesis build<MeasureHypothesis>(const HypothesisSpec& spec);

/// Diagonal re-enumeration: diagonal d = 1, 2, ... emits base indices 1..d,
/// so position p maps to p - d(d-1)/2 where d(d-1)/2 < p <= d(d+1)/2.
std::size_t interleave_decode(std::uint64_t pos);

/// The list re-enumerated so that every base element appears at infinitely
/// many positions. For finite base lists, positions decoding past the end are
/// holes.
template <class H>
class InterleavedList {
 public:
  explicit InterleavedList(HypothesisList<H> inner) : inner_(std::move(inner)) {}

  const HypothesisList<H>& inner() const { return inner_; }

  /// Base index behind position pos, or nullopt for a hole.
  std::optional<std::size_t> base_index(std::uint64_t pos) const;
  std::optional<H> at(std::uint64_t pos) const;

 private:
  HypothesisList<H> inner_;
};

using MeasureInterleaved = InterleavedList<MeasureHypothesis>;

/// Least index j <= bound whose element is extensionally equal to target.
template <class H>
std::optional<std::size_t> minimal_equal_index(const HypothesisList<H>& list, const H& target,
                                               std::size_t bound);

/// Generated pmf list: element i is the simple pmf f_i(j) = j + (i - 1) on n
/// symbols.
PmfList simple_linear_list(std::size_t n);

extern template class HypothesisList<PmfHypothesis>;
extern template class HypothesisList<MarkovHypothesis>;
extern template class HypothesisList<MeasureHypothesis>;
extern template class InterleavedList<PmfHypothesis>;
extern template class InterleavedList<MarkovHypothesis>;
extern template class InterleavedList<MeasureHypothesis>;

}  // namespace probid
