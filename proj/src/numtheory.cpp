#include "plab/numtheory.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace plab {
namespace {

// Cached sieve of Eratosthenes, grown geometrically on demand. Primes used
// by this project stay below 10^7, so a flat sieve is the right tool.
class PrimeCache {
 public:
  std::uint64_t nth(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (primes_.size() < n) grow();
    return primes_[n - 1];
  }

 private:
  void grow() {
    limit_ = limit_ ? limit_ * 4 : 1 << 10;
    std::vector<bool> composite(limit_ + 1, false);
    primes_.clear();
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= limit_; j += i) composite[j] = true;
    }
  }

  std::mutex mu_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

PrimeCache& prime_cache() {
  static PrimeCache cache;
  return cache;
}

}  // namespace

ResidueConstraint::ResidueConstraint(Integer r, Integer m)
    : residue(std::move(r)), modulus(std::move(m)) {
  if (modulus < 2) throw std::invalid_argument("ResidueConstraint: modulus must be >= 2");
  if (residue < 0 || residue >= modulus)
    throw std::invalid_argument("ResidueConstraint: residue out of range [0, modulus)");
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: primes are 1-indexed, n must be >= 1");
  return prime_cache().nth(n);
}

std::vector<std::uint64_t> prime_window(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("prime_window: n and k must be >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(nth_prime(n + i));
  return out;
}

Integer crt_solve(std::span<const ResidueConstraint> constraints) {
  // Fold pairwise: maintain K mod M, merge in (r, m) via extended Euclid.
  Integer K = 0;
  Integer M = 1;
  for (const auto& c : constraints) {
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t(),
               c.modulus.get_mpz_t());
    if (g != 1) {
      // Name the offending pair: the accumulated modulus shares g with c.modulus,
      // so some earlier modulus does too.
      for (const auto& prev : constraints) {
        if (&prev == &c) break;
        Integer pg;
        mpz_gcd(pg.get_mpz_t(), prev.modulus.get_mpz_t(), c.modulus.get_mpz_t());
        if (pg != 1)
          throw std::invalid_argument("crt_solve: moduli " + prev.modulus.get_str() +
                                      " and " + c.modulus.get_str() +
                                      " are not coprime (gcd " + pg.get_str() + ")");
      }
      throw std::invalid_argument("crt_solve: moduli are not pairwise coprime");
    }
    // K' = K + M * u * (r - K) mod (M * m)
    Integer Mm = M * c.modulus;
    Integer K2 = K + M * (u * (c.residue - K) % c.modulus);
    mpz_mod(K2.get_mpz_t(), K2.get_mpz_t(), Mm.get_mpz_t());
    K = K2;
    M = Mm;
  }
  return K;
}

Integer crt_solve(const std::vector<ResidueConstraint>& constraints) {
  return crt_solve(std::span<const ResidueConstraint>(constraints));
}

Integer lcm_list(std::span<const Integer> values) {
  if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
  Integer acc = 1;
  for (const auto& v : values) {
    if (v <= 0) throw std::invalid_argument("lcm_list: values must be positive");
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

Integer lcm_list(const std::vector<Integer>& values) {
  return lcm_list(std::span<const Integer>(values));
}

std::uint64_t lcm_list_u64(const std::vector<std::uint64_t>& values) {
  std::vector<Integer> big;
  big.reserve(values.size());
  for (auto v : values) big.emplace_back(std::to_string(v));
  Integer l = lcm_list(big);
  if (!l.fits_ulong_p()) throw std::overflow_error("lcm_list_u64: result exceeds 64 bits");
  return l.get_ui();
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace plab
