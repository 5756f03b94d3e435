#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace probid {

/// Outcomes are natural numbers.
using Symbol = std::uint64_t;

/// A finite data prefix x_1 ... x_n.
using Word = std::vector<Symbol>;

/// Letters map to 1, 2, ... ("ab" -> {1, 2}); used for fixtures and configs.
Word word_from_letters(const std::string& letters);

/// Space-separated decimal rendering.
std::string to_string(const Word& w);

}  // namespace probid
