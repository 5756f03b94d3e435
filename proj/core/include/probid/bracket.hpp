#pragma once

#include <cstdint>

#include "probid/rational.hpp"

namespace probid {

/// Closed interval [lo, hi] with rational endpoints.
struct Bracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

enum class Position { Below, Inside, Above };

/// Three-way test of v against a bracket. Inside means the bracket cannot
/// decide the strict comparison; callers treat it as failure unless they say
/// otherwise.
Position cmp_against_bracket(const Rational& v, const Bracket& b);

/// Bracket around sqrt(ln(n) / n) with natural log, width at most 2^-20.
/// tau(1) is exactly [0, 0].
Bracket tau(std::uint64_t n);

/// Bracket around ln(n) for n >= 1.
Bracket ln_bracket(std::uint64_t n);

/// Bracket around log2(r) for rational r >= 1, width at most 2^-100.
Bracket log2_bracket(const Rational& r);

}  // namespace probid
