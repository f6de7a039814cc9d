#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

/// One congruence K ≡ residue (mod modulus).
struct ResidueConstraint {
  Integer residue;  // 0 <= residue < modulus
  Integer modulus;  // >= 2

  ResidueConstraint(Integer r, Integer m);
  ResidueConstraint(long r, long m) : ResidueConstraint(Integer(r), Integer(m)) {}
};

/// The n-th prime, 1-indexed (nth_prime(1) == 2). Rejects n == 0.
std::uint64_t nth_prime(std::uint64_t n);

/// The k consecutive primes p_n, p_{n+1}, ..., p_{n+k-1} (1-indexed).
std::vector<std::uint64_t> prime_window(std::uint64_t n, std::uint64_t k);

/// Smallest nonnegative K with K ≡ r_i (mod m_i) for every constraint.
/// Moduli must be pairwise coprime; the solution set is K + t·Πm_i.
/// Built on the extended-Euclid construction, not scanning.
Integer crt_solve(std::span<const ResidueConstraint> constraints);
Integer crt_solve(const std::vector<ResidueConstraint>& constraints);

/// Exact least common multiple of a nonempty list of positive integers.
Integer lcm_list(std::span<const Integer> values);
Integer lcm_list(const std::vector<Integer>& values);
std::uint64_t lcm_list_u64(const std::vector<std::uint64_t>& values);

bool is_prime_u64(std::uint64_t n);

}  // namespace plab
