#pragma once

#include <cstdint>
#include <set>

#include "probid/guess_trace.hpp"
#include "probid/hypothesis_list.hpp"
#include "probid/markov_identify.hpp"
#include "probid/pmf.hpp"
#include "probid/sampling.hpp"

namespace probid {

/// A_n: symbols with a positive count.
std::set<Symbol> observed_support(const SamplePrefix& s);

/// Least m with 1 - (q(a_1) + ... + q(a_m)) < 1/sqrt(n), decided exactly as
/// tail^2 * n < 1. The cutoff set B_{q,n} is {a_1, ..., a_m}.
std::size_t mass_cutoff(const PmfHypothesis& q, std::uint64_t n);

/// Pass iff |q(a) - count(a)/n| is strictly below tau(n) for every a in
/// A_n united with B_{q,n}. Inside-bracket verdicts fail. n = |s| must be >= 1.
TestResult candidate_test(const PmfHypothesis& q, const SamplePrefix& s);

/// Least i <= min(n, |list|) with candidate_test(list[i], s) = Pass; nullopt
/// (undecided) when no index passes.
Guess identify_step(const PmfList& list, const SamplePrefix& s);

/// Draws one growing i.i.d. sample from `target` and records identify_step at
/// n = stride, 2 stride, ..., n_max.
GuessTrace identify_stream(const PmfList& list, const PmfHypothesis& target, std::uint64_t seed,
                           std::uint64_t n_max, std::uint64_t stride);

}  // namespace probid
