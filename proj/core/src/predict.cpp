#include "probid/predict.hpp"

#include <sstream>

#include "probid/error.hpp"

namespace probid {

Rational Prediction::total() const {
  Rational sum = tail;
  for (const auto& [a, m] : masses) sum += m;
  return sum;
}

Rational Prediction::at(Symbol a) const {
  auto it = masses.find(a);
  return it == masses.end() ? Rational(0) : it->second;
}

std::string Prediction::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, m] : masses) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(a) + ": " + m.str();
  }
  if (tail.sign() != 0) out += std::string(first ? "" : ", ") + "tail: " + tail.str();
  return out + "}";
}

Prediction predict_iid(const PmfHypothesis& p, std::span<const Symbol>, const Rational& coverage) {
  Prediction out;
  const auto size = p.support_size();
  Rational covered = 0;
  for (std::size_t j = 1; !size || j <= *size; ++j) {
    const Symbol a = p.support_at(j);
    const Rational m = p.eval(a);
    out.masses[a] = m;
    covered += m;
    if (!size && Rational(1) - covered <= coverage) break;
  }
  out.tail = Rational(1) - covered;
  return out;
}

Prediction predict_markov(const MarkovHypothesis& m, std::span<const Symbol> history) {
  if (history.empty()) throw Error(ErrorKind::EmptyHistory, "prediction needs a current state");
  const auto row = m.index_of(history.back());
  if (!row) {
    throw Error(ErrorKind::UnknownState, "state " + std::to_string(history.back()) + " not in chain");
  }
  Prediction out;
  for (std::size_t k = 0; k < m.states().size(); ++k) {
    out.masses[m.states()[k]] = m.transitions()[*row][k];
  }
  return out;
}

Prediction predict_measure(const MeasureHypothesis& mu, std::span<const Symbol> history) {
  const auto cond = mu.conditionals(history);
  Prediction out;
  for (std::size_t k = 0; k < cond.size(); ++k) out.masses[mu.alphabet()[k]] = cond[k];
  return out;
}

BlackSwanReport black_swan_demo(std::uint64_t n_switch) {
  const auto [mu1, mu0] = make_black_swan_pair(n_switch);
  BlackSwanReport r;
  r.n_switch = n_switch;
  r.history = Word(n_switch, 1);
  r.mu1_mass = mu1.eval(r.history);
  r.mu0_mass = mu0.eval(r.history);
  r.mu1 = predict_measure(mu1, r.history);
  r.mu0 = predict_measure(mu0, r.history);

  std::ostringstream text;
  text << "black swan, switch point " << n_switch << "\n"
       << "history: a^" << n_switch << " (identical for both measures)\n"
       << "mu1(history) = " << r.mu1_mass.str() << ", mu0(history) = " << r.mu0_mass.str() << "\n"
       << "mu1 next: a " << r.mu1.at(1).str() << ", b " << r.mu1.at(2).str() << "\n"
       << "mu0 next: a " << r.mu0.at(1).str() << ", b " << r.mu0.at(2).str() << "\n"
       << "both measures give the history positive mass, so no finite run of a's\n"
       << "separates them; predictions made before identification settles can be wrong.\n";
  r.text = text.str();

  std::ostringstream csv;
  csv << "hypothesis,history_length,symbol,probability\n";
  for (const auto& [name, pred] : {std::pair{"mu1", &r.mu1}, std::pair{"mu0", &r.mu0}}) {
    for (Symbol a : {Symbol{1}, Symbol{2}}) {
      csv << name << ',' << n_switch << ',' << (a == 1 ? 'a' : 'b') << ',' << pred->at(a).str() << '\n';
    }
  }
  r.csv = csv.str();
  return r;
}

}  // namespace probid
