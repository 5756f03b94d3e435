#include "probid/markov_identify.hpp"

#include <numeric>
#include <queue>

#include "probid/error.hpp"
#include "probid/hypothesis_list.hpp"
#include "probid/sampling.hpp"

namespace probid {

namespace {

bool is_square_stochastic(const RationalMatrix& q) {
  for (const auto& row : q) {
    if (row.size() != q.size()) return false;
    Rational total = 0;
    for (const Rational& p : row) {
      if (p.sign() < 0) return false;
      total += p;
    }
    if (total != Rational(1)) return false;
  }
  return !q.empty();
}

std::vector<bool> reachable(const RationalMatrix& q, std::size_t from, bool reverse) {
  std::vector<bool> seen(q.size(), false);
  std::queue<std::size_t> frontier;
  seen[from] = true;
  frontier.push(from);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < q.size(); ++v) {
      const bool edge = reverse ? !q[v][u].is_zero() : !q[u][v].is_zero();
      if (edge && !seen[v]) {
        seen[v] = true;
        frontier.push(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const RationalMatrix& q) {
  if (q.empty()) return false;
  const auto fwd = reachable(q, 0, false);
  const auto bwd = reachable(q, 0, true);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!fwd[i] || !bwd[i]) return false;
  return true;
}

std::uint64_t period(const RationalMatrix& q) {
  // BFS depths from state 0; the period is the gcd of depth(u) + 1 - depth(v)
  // over all edges u -> v.
  std::vector<std::int64_t> depth(q.size(), -1);
  std::queue<std::size_t> frontier;
  depth[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (!q[u][v].is_zero() && depth[v] < 0) {
        depth[v] = depth[u] + 1;
        frontier.push(v);
      }
    }
  }
  std::uint64_t g = 0;
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (depth[u] < 0) continue;
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (q[u][v].is_zero() || depth[v] < 0) continue;
      const std::int64_t d = depth[u] + 1 - depth[v];
      g = std::gcd(g, static_cast<std::uint64_t>(d < 0 ? -d : d));
    }
  }
  return g;
}

std::vector<Rational> stationary(const RationalMatrix& q) {
  if (!is_square_stochastic(q)) throw Error(ErrorKind::NotErgodic, "matrix is not square stochastic");
  if (!is_irreducible(q)) throw Error(ErrorKind::NotErgodic, "chain is reducible");
  if (period(q) != 1) throw Error(ErrorKind::NotErgodic, "chain is periodic");

  const std::size_t n = q.size();
  // Row j: sum_i pi_i (q_ij - [i == j]) = 0; the last row becomes sum_i pi_i = 1.
  RationalMatrix a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = q[i][j] - Rational(i == j ? 1 : 0);
  }
  for (std::size_t i = 0; i < n; ++i) a[n - 1][i] = 1;
  a[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularSystem, "stationary system is singular");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
  return pi;
}

Rational ergodic_mean(const MarkovHypothesis& m) {
  Rational mean = 0;
  for (std::size_t i = 0; i < m.states().size(); ++i) {
    mean += m.stationary()[i] * Rational(static_cast<std::int64_t>(m.states()[i]));
  }
  return mean;
}

void TransitionCounts::push(Symbol state) {
  ++n;
  ++visits[state];
  if (last) ++trans[{*last, state}];
  last = state;
}

std::uint64_t TransitionCounts::row_total(Symbol state) const {
  const auto it = visits.find(state);
  if (it == visits.end()) return 0;
  return it->second - (last && *last == state ? 1 : 0);
}

std::uint64_t TransitionCounts::count(Symbol from, Symbol to) const {
  const auto it = trans.find({from, to});
  return it == trans.end() ? 0 : it->second;
}

TransitionCounts empirical(std::span<const Symbol> run) {
  TransitionCounts c;
  for (Symbol s : run) c.push(s);
  return c;
}

TestResult chain_candidate_test(const MarkovHypothesis& m, const TransitionCounts& c) {
  if (c.n == 0) return TestResult::Fail;
  for (const auto& [state, visits] : c.visits) {
    if (!m.index_of(state)) return TestResult::Fail;
  }
  const auto below = [](const Rational& diff, std::uint64_t size) {
    return cmp_against_bracket(abs(diff), tau(size)) == Position::Below;
  };

  // (a) conditional row frequencies on well-visited rows
  const std::uint64_t n = c.n;
  for (Symbol from : m.states()) {
    const auto it = c.visits.find(from);
    const std::uint64_t visits = it == c.visits.end() ? 0 : it->second;
    // visits >= sqrt(n)
    if (BigInt(visits) * visits < n) continue;
    const std::uint64_t total = c.row_total(from);
    if (total == 0) continue;
    for (Symbol to : m.states()) {
      const Rational freq(BigInt(c.count(from, to)), BigInt(total));
      if (!below(m.transition(from, to) - freq, total)) return TestResult::Fail;
    }
  }

  // (b) stationary frequencies
  for (std::size_t i = 0; i < m.states().size(); ++i) {
    const auto it = c.visits.find(m.states()[i]);
    const std::uint64_t visits = it == c.visits.end() ? 0 : it->second;
    if (!below(m.stationary()[i] - Rational(BigInt(visits), BigInt(n)), n)) return TestResult::Fail;
  }
  return TestResult::Pass;
}

Guess identify_chain(const ChainList& list, const TransitionCounts& c) {
  const std::size_t bound = list.scan_bound(c.n);
  for (std::size_t i = 1; i <= bound; ++i) {
    if (chain_candidate_test(list.get(i), c) == TestResult::Pass) return i;
  }
  return std::nullopt;
}

GuessTrace identify_chain_stream(const ChainList& list, const MarkovHypothesis& source,
                                 std::uint64_t seed, std::uint64_t n_max, std::uint64_t stride) {
  GuessTrace trace;
  const auto schedule = checkpoint_schedule(n_max, stride);
  if (schedule.empty()) return trace;
  const ChainSampler sampler(source);
  Rng rng(seed);
  TransitionCounts counts;
  Symbol state = source.states().front();
  auto next = schedule.begin();
  for (std::uint64_t t = 1; t <= schedule.back(); ++t) {
    state = sampler.step(state, rng);
    counts.push(state);
    if (t == *next) {
      trace.record(t, identify_chain(list, counts));
      ++next;
    }
  }
  return trace;
}

}  // namespace probid
