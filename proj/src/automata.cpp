#include "plab/automata.hpp"

#include <stdexcept>

namespace plab {

namespace {

void check_state_names(const std::vector<std::string>& names, std::size_t count) {
  if (names.size() != count)
    throw std::invalid_argument("automaton: state name list does not match state count");
}

void check_index_set(const StateSet& s, std::size_t count, const char* what) {
  for (std::size_t i : s)
    if (i >= count)
      throw std::invalid_argument(std::string("automaton: ") + what +
                                  " contains an out-of-range state index");
}

Rational mass_on(const StateSet& s, const RatVector& v) {
  Rational acc;
  for (std::size_t i : s) acc += v[i];
  return acc;
}

}  // namespace

UnaryDFA::UnaryDFA(std::vector<std::string> states, std::vector<std::size_t> next,
                   std::size_t start, StateSet accepting)
    : states_(std::move(states)),
      next_(std::move(next)),
      start_(start),
      accepting_(std::move(accepting)) {
  if (next_.empty()) throw std::invalid_argument("UnaryDFA: no states");
  check_state_names(states_, next_.size());
  for (std::size_t t : next_)
    if (t >= next_.size())
      throw std::invalid_argument("UnaryDFA: transition target out of range");
  if (start_ >= next_.size()) throw std::invalid_argument("UnaryDFA: start out of range");
  check_index_set(accepting_, next_.size(), "accepting set");
}

UnaryPFA::UnaryPFA(std::vector<std::string> states, StochasticMatrix transition,
                   RatVector initial, StateSet accepting, StateSet neutral)
    : states_(std::move(states)),
      transition_(std::move(transition)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      neutral_(std::move(neutral)),
      powers_(std::make_shared<PowerCache>(transition_.matrix())) {
  if (initial_.size() != transition_.dim())
    throw std::invalid_argument("UnaryPFA: initial vector size mismatch");
  check_state_names(states_, initial_.size());
  Rational sum;
  for (const auto& p : initial_) {
    if (p.sign() < 0 || p > Rational(1))
      throw std::invalid_argument("UnaryPFA: initial probability outside [0,1]");
    sum += p;
  }
  if (sum != Rational(1))
    throw std::invalid_argument("UnaryPFA: initial probabilities sum to " + sum.str());
  check_index_set(accepting_, initial_.size(), "accepting set");
  check_index_set(neutral_, initial_.size(), "neutral set");
  for (std::size_t i : neutral_)
    if (accepting_.count(i))
      throw std::invalid_argument("UnaryPFA: accepting and neutral sets intersect");
}

UnaryMCQFA::UnaryMCQFA(std::vector<std::string> states, OrthogonalMatrix transition,
                       RatVector initial, StateSet accepting)
    : states_(std::move(states)),
      transition_(std::move(transition)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      powers_(std::make_shared<PowerCache>(transition_.matrix())) {
  if (initial_.size() != transition_.dim())
    throw std::invalid_argument("UnaryMCQFA: initial vector size mismatch");
  check_state_names(states_, initial_.size());
  Rational norm;
  for (const auto& a : initial_) norm += a.squared();
  if (norm != Rational(1))
    throw std::invalid_argument("UnaryMCQFA: squared norm of initial vector is " +
                                norm.str() + ", expected 1");
  check_index_set(accepting_, initial_.size(), "accepting set");
}

RatVector pfa_state_at(const UnaryPFA& pfa, std::uint64_t m, std::size_t bit_budget) {
  return pfa.powers().apply(pfa.initial(), m, bit_budget);
}

OutcomeDistribution pfa_outcome(const UnaryPFA& pfa, std::uint64_t m,
                                std::size_t bit_budget) {
  const RatVector v = pfa_state_at(pfa, m, bit_budget);
  OutcomeDistribution out;
  out.accept = mass_on(pfa.accepting(), v);
  out.dont_know = mass_on(pfa.neutral(), v);
  out.reject = Rational(1) - out.accept - out.dont_know;
  return out;
}

RatVector qfa_state_at(const UnaryMCQFA& qfa, std::uint64_t m, std::size_t bit_budget) {
  return qfa.powers().apply(qfa.initial(), m, bit_budget);
}

Rational qfa_accept_probability(const UnaryMCQFA& qfa, std::uint64_t m,
                                std::size_t bit_budget) {
  const RatVector v = qfa_state_at(qfa, m, bit_budget);
  Rational acc;
  for (std::size_t i : qfa.accepting()) acc += v[i].squared();
  return acc;
}

bool dfa_accepts(const UnaryDFA& dfa, std::uint64_t m) {
  const auto& next = dfa.next();
  std::vector<std::int64_t> seen_at(next.size(), -1);
  std::vector<std::size_t> order;
  order.reserve(next.size());
  std::size_t cur = dfa.start();
  std::uint64_t step = 0;
  while (true) {
    if (step == m) return dfa.accepting().count(cur) != 0;
    if (seen_at[cur] >= 0) break;
    seen_at[cur] = static_cast<std::int64_t>(step);
    order.push_back(cur);
    cur = next[cur];
    ++step;
  }
  const std::uint64_t tail = static_cast<std::uint64_t>(seen_at[cur]);
  const std::uint64_t cycle = step - tail;
  const std::uint64_t effective = tail + (m - tail) % cycle;
  return dfa.accepting().count(order[effective]) != 0;
}

UnaryPFA embed_dfa_as_pfa(const UnaryDFA& dfa) {
  const std::size_t d = dfa.state_count();
  RatMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(dfa.next()[i], i) = 1;
  RatVector initial(d);
  initial[dfa.start()] = 1;
  return UnaryPFA(dfa.states(), StochasticMatrix(std::move(m)), std::move(initial),
                  dfa.accepting());
}

}  // namespace plab
