#include "probid/guess_trace.hpp"

#include "probid/error.hpp"

namespace probid {

void GuessTrace::record(std::uint64_t n, Guess guess) {
  if (!checkpoints_.empty() && n <= checkpoints_.back().n) {
    throw Error(ErrorKind::IndexOutOfRange, "checkpoints must increase");
  }
  checkpoints_.push_back({n, guess});
}

std::optional<std::uint64_t> GuessTrace::converged_at() const {
  if (checkpoints_.empty() || !checkpoints_.back().guess) return std::nullopt;
  const Guess last = checkpoints_.back().guess;
  std::size_t first = checkpoints_.size() - 1;
  while (first > 0 && checkpoints_[first - 1].guess == last) --first;
  return checkpoints_[first].n;
}

Guess GuessTrace::final_guess() const {
  if (checkpoints_.empty()) return std::nullopt;
  return checkpoints_.back().guess;
}

std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t n_max, std::uint64_t stride) {
  if (stride == 0) throw Error(ErrorKind::ConfigInvalid, "checkpoint.stride");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = stride; n <= n_max; n += stride) out.push_back(n);
  return out;
}

}  // namespace probid
