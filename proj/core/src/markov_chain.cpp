#include "probid/markov_chain.hpp"

#include <algorithm>
#include <set>

#include "probid/error.hpp"
#include "probid/markov_identify.hpp"

namespace probid {

MarkovHypothesis::MarkovHypothesis(std::vector<Symbol> states, RationalMatrix transitions)
    : states_(std::move(states)), q_(std::move(transitions)) {
  if (states_.empty()) throw Error(ErrorKind::BadSymbol, "chain has no states");
  if (std::set<Symbol>(states_.begin(), states_.end()).size() != states_.size()) {
    throw Error(ErrorKind::BadSymbol, "duplicate state label");
  }
  if (q_.size() != states_.size()) {
    throw Error(ErrorKind::NotErgodic, "transition matrix has " + std::to_string(q_.size()) +
                                           " rows for " + std::to_string(states_.size()) + " states");
  }
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i].size() != states_.size()) {
      throw Error(ErrorKind::NotErgodic, "row " + std::to_string(i + 1) + " has wrong length");
    }
    Rational total = 0;
    for (const Rational& p : q_[i]) {
      if (p.sign() < 0) {
        throw Error(ErrorKind::NonpositiveMass, "negative transition in row " + std::to_string(i + 1));
      }
      total += p;
    }
    if (total != Rational(1)) {
      throw Error(ErrorKind::SumNotOne,
                  "row " + std::to_string(i + 1) + " sums to " + total.str());
    }
  }
  pi_ = probid::stationary(q_);
}

std::optional<std::size_t> MarkovHypothesis::index_of(Symbol state) const {
  const auto it = std::find(states_.begin(), states_.end(), state);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

Rational MarkovHypothesis::transition(Symbol from, Symbol to) const {
  const auto i = index_of(from);
  const auto j = index_of(to);
  if (!i || !j) return 0;
  return q_[*i][*j];
}

std::string MarkovHypothesis::canonical_key() const {
  std::vector<std::size_t> order(states_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return states_[a] < states_[b]; });
  std::string key = "chain";
  for (std::size_t i : order) {
    key += " " + std::to_string(states_[i]) + ":";
    for (std::size_t j : order) key += " " + q_[i][j].str();
    key += ";";
  }
  return key;
}

std::string MarkovHypothesis::describe() const {
  std::string out = "chain{";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (i) out += "; ";
    out += std::to_string(states_[i]) + "->(";
    for (std::size_t j = 0; j < states_.size(); ++j) {
      if (j) out += ",";
      out += q_[i][j].str();
    }
    out += ")";
  }
  return out + "}";
}

}  // namespace probid
