#pragma once

#include <cstdint>
#include <vector>

#include "plab/automata.hpp"
#include "plab/matrix.hpp"

namespace plab {

/// Transient/ergodic decomposition of a stochastic matrix. Ergodic sets are
/// the bottom strongly-connected components of the nonzero-transition
/// digraph; each carries its period t_i (gcd of internal cycle lengths) and
/// D = lcm of all periods.
struct ChainStructure {
  std::vector<std::size_t> transient;                   // sorted
  std::vector<std::vector<std::size_t>> ergodic_sets;   // each sorted
  std::vector<std::uint64_t> periods;                   // one per ergodic set
  std::uint64_t D = 1;

  // Residue (BFS level mod period) of each ergodic state, aligned with
  // ergodic_sets; feeds period_certificate.
  std::vector<std::vector<std::uint64_t>> cyclic_residue;
};

struct LimitEstimate {
  double estimate = 0.0;
  bool stable = false;
};

/// Empirical limiting acceptance probabilities along each residue class
/// mod D. Estimates are double precision by design: the limits are
/// irrational in general and never feed an exact decision.
struct LimitProfile {
  std::vector<LimitEstimate> per_residue;  // size D
};

ChainStructure analyze_chain(const StochasticMatrix& matrix);

/// Acceptance at m = r*D + j for a geometric ladder of r up to r_max
/// (r_max >= 16); the final value is the estimate, and the flag reports
/// whether the last two ladder values agree within tolerance.
LimitProfile limit_profile(const UnaryPFA& pfa, const ChainStructure& structure,
                           std::uint64_t r_max, double tolerance = 1e-9);

/// The t cyclic subsets of one ergodic set, in traversal order: the process
/// maps subset i into subset (i+1) mod t.
std::vector<std::vector<std::size_t>> period_certificate(const ChainStructure& structure,
                                                         std::size_t ergodic_index);

}  // namespace plab
