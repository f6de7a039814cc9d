#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "plab/acceptance.hpp"
#include "plab/automata.hpp"
#include "plab/promise.hpp"
#include "plab/pythagorean.hpp"

namespace plab {

/// 2-state rotation QFA: initial [1, 0], rotation by phi per letter, the
/// first state is the only accepting state. Acceptance after m letters is
/// exactly cos^2(m*phi).
UnaryMCQFA build_theta_qfa(const PythagoreanAngle& phi);

/// The 2k-state QFA for the prime-window problem: k isolated 2-state blocks,
/// block j rotating by 2*pi/p_j per letter, weight 1/k of the squared initial
/// amplitude on each block's accepting state. Amplitudes (1/sqrt(k)) and most
/// matrix entries are irrational, so the automaton is kept in squared-
/// amplitude form: acceptance is the closed form
///   (1/k) * sum_j cos^2(2*pi*(m mod p_j)/p_j),
/// evaluated per block: exactly 1 for blocks with zero residue, and by
/// 256-bit certified interval arithmetic otherwise.
class LknQfa {
 public:
  LknQfa(std::uint64_t k, std::uint64_t n);

  std::uint64_t k() const { return k_; }
  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t state_count() const { return 2 * k_; }
  const std::vector<std::string>& states() const { return states_; }
  const StateSet& accepting() const { return accepting_; }

  /// Exact Rational(1) on yes-instances (every residue zero); otherwise a
  /// certified enclosure of width far below 1e-30.
  AcceptanceValue accept_probability(const Integer& m) const;
  AcceptanceValue accept_probability(std::uint64_t m) const;

  /// Interval route with the symbolic yes shortcut disabled; cross-checks
  /// the exact path.
  ProbInterval accept_probability_interval(const Integer& m) const;

 private:
  ProbInterval block_cos_sq(std::size_t block, std::uint64_t residue) const;

  std::uint64_t k_;
  std::uint64_t n_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::string> states_;
  StateSet accepting_;

  // Residues repeat mod p, so the per-block cos^2 enclosures are memoized.
  // Shared across copies; guarded for concurrent sweeps.
  struct CosSqCache {
    std::mutex mu;
    std::vector<std::vector<std::unique_ptr<ProbInterval>>> table;
  };
  std::shared_ptr<CosSqCache> cache_;
};

LknQfa build_lkn_qfa(std::uint64_t k, std::uint64_t n);

/// k deterministic modular counters run in parallel with probability 1/k
/// each; state count is the sum of the window primes. Acceptance equals
/// (number of window primes dividing m) / k, exactly.
UnaryPFA build_lkn_pfa(std::uint64_t k, std::uint64_t n);

/// Cyclic DFA of t = p_n * ... * p_{n + floor(k/3) + 1} states accepting
/// exactly the multiples of t.
UnaryDFA build_lkn_dfa(std::uint64_t k, std::uint64_t n);

struct ConversionOptions {
  std::uint64_t window = 8;
  std::optional<Rational> margin;  // defaults to (1/2 - epsilon)/4
  std::size_t bit_budget = kDefaultBitBudget;
};

struct CyclicDfaConversion {
  UnaryDFA dfa;
  std::uint64_t period;            // D, the cycle length
  std::uint64_t threshold_length;  // first input length decided by the cycle
  std::vector<Rational> limit_estimate;  // per residue class mod D
};

/// Thrown when limit estimates keep oscillating past the search bound,
/// which signals the PFA may not solve the problem at the claimed error.
class StabilizationError : public std::runtime_error {
 public:
  explicit StabilizationError(const std::string& what) : std::runtime_error(what) {}
};

/// Rebuilds a PFA presumed to solve a promise problem with error bound
/// epsilon < 1/2 into an equivalent cyclic DFA: detects the period D,
/// estimates the limiting acceptance of every residue class by exact
/// evaluation along windows of multiples, rounds each class at 1/2
/// (>= 1/2 accepts), and splices a tail that copies the PFA's rounded
/// decisions for lengths below the stabilization threshold.
/// The classifier, when given, is used for a post-construction agreement
/// check on promised lengths just past the threshold.
CyclicDfaConversion pfa_to_cyclic_dfa(
    const UnaryPFA& pfa, const Rational& epsilon,
    const std::function<PromiseLabel(std::uint64_t)>& problem,
    std::uint64_t search_bound, const ConversionOptions& options = {});

}  // namespace plab
