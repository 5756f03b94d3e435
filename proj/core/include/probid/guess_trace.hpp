#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace probid {

/// Output of one identification step: a 1-based list index, or no guess.
using Guess = std::optional<std::size_t>;

struct Checkpoint {
  std::uint64_t n = 0;
  Guess guess;
};

/// Guesses recorded at increasing sample sizes.
class GuessTrace {
 public:
  /// Checkpoint n must exceed the previous one.
  void record(std::uint64_t n, Guess guess);

  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

  /// Least recorded n0 such that every guess at n >= n0 is the same decided
  /// index; nullopt when the last guess is undecided or nothing was recorded.
  std::optional<std::uint64_t> converged_at() const;

  Guess final_guess() const;

 private:
  std::vector<Checkpoint> checkpoints_;
};

/// n = stride, 2 stride, ..., up to n_max. Empty when stride > n_max.
std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t n_max, std::uint64_t stride);

}  // namespace probid
