#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/rational.hpp"

namespace plab {

using StateSet = std::set<std::size_t>;

/// Final measurement split of a probabilistic run. Sums to exactly 1.
struct OutcomeDistribution {
  Rational accept;
  Rational reject;
  Rational dont_know;
};

/// Unary DFA: a function walk over state indices.
class UnaryDFA {
 public:
  UnaryDFA(std::vector<std::string> states, std::vector<std::size_t> next,
           std::size_t start, StateSet accepting);

  std::size_t state_count() const { return next_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::size_t>& next() const { return next_; }
  std::size_t start() const { return start_; }
  const StateSet& accepting() const { return accepting_; }

 private:
  std::vector<std::string> states_;
  std::vector<std::size_t> next_;
  std::size_t start_;
  StateSet accepting_;
};

/// Unary PFA over exact rationals. The optional neutral set carries the
/// Las Vegas "don't know" states; it must be disjoint from accepting.
class UnaryPFA {
 public:
  UnaryPFA(std::vector<std::string> states, StochasticMatrix transition,
           RatVector initial, StateSet accepting, StateSet neutral = {});

  std::size_t state_count() const { return initial_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const StochasticMatrix& transition() const { return transition_; }
  const RatVector& initial() const { return initial_; }
  const StateSet& accepting() const { return accepting_; }
  const StateSet& neutral() const { return neutral_; }

  const PowerCache& powers() const { return *powers_; }

 private:
  std::vector<std::string> states_;
  StochasticMatrix transition_;
  RatVector initial_;
  StateSet accepting_;
  StateSet neutral_;
  std::shared_ptr<const PowerCache> powers_;
};

/// Moore-Crutchfield QFA restricted to real orthogonal transitions with
/// exact rational entries; the squared norm of the state is preserved
/// exactly. Irrational-amplitude constructions live elsewhere.
class UnaryMCQFA {
 public:
  UnaryMCQFA(std::vector<std::string> states, OrthogonalMatrix transition,
             RatVector initial, StateSet accepting);

  std::size_t state_count() const { return initial_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const OrthogonalMatrix& transition() const { return transition_; }
  const RatVector& initial() const { return initial_; }
  const StateSet& accepting() const { return accepting_; }

  const PowerCache& powers() const { return *powers_; }

 private:
  std::vector<std::string> states_;
  OrthogonalMatrix transition_;
  RatVector initial_;
  StateSet accepting_;
  std::shared_ptr<const PowerCache> powers_;
};

/// A^m v_0, exact, via cached repeated squaring.
RatVector pfa_state_at(const UnaryPFA& pfa, std::uint64_t m,
                       std::size_t bit_budget = kDefaultBitBudget);

/// Accept / don't-know / reject mass after m letters.
OutcomeDistribution pfa_outcome(const UnaryPFA& pfa, std::uint64_t m,
                                std::size_t bit_budget = kDefaultBitBudget);

/// U^m |v_0>, exact.
RatVector qfa_state_at(const UnaryMCQFA& qfa, std::uint64_t m,
                       std::size_t bit_budget = kDefaultBitBudget);

/// Sum of squared amplitudes on accepting states; exactly in [0, 1].
Rational qfa_accept_probability(const UnaryMCQFA& qfa, std::uint64_t m,
                                std::size_t bit_budget = kDefaultBitBudget);

/// Follows the transition function m times with rho-shape cycle detection:
/// O(|Q|) work regardless of m.
bool dfa_accepts(const UnaryDFA& dfa, std::uint64_t m);

/// The 0/1-entry PFA that mirrors a DFA exactly.
UnaryPFA embed_dfa_as_pfa(const UnaryDFA& dfa);

}  // namespace plab
