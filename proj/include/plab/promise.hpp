#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/numtheory.hpp"
#include "plab/pythagorean.hpp"
#include "plab/rational.hpp"

namespace plab {

enum class PromiseLabel { Yes, No, Unpromised };

const char* to_string(PromiseLabel label);

/// Exact orbit of a plane rotation: keeps (cos(m*phi), sin(m*phi)) as
/// rationals, with O(1) stepping and cached-squaring random access.
class RotationOrbit {
 public:
  explicit RotationOrbit(const PythagoreanAngle& angle,
                         std::size_t bit_budget = kDefaultBitBudget);
  RotationOrbit(std::shared_ptr<const PowerCache> powers, const PythagoreanAngle& angle,
                std::size_t bit_budget);

  void seek(std::uint64_t m);
  void advance();

  std::uint64_t position() const { return m_; }
  const Rational& cos() const { return cos_; }
  const Rational& sin() const { return sin_; }

 private:
  std::shared_ptr<const PowerCache> powers_;
  Rational cos_phi_;
  Rational sin_phi_;
  std::size_t bit_budget_;
  std::uint64_t m_ = 0;
  Rational cos_{1};
  Rational sin_{0};
};

/// The rotation promise problem: input length m is a yes-instance when
/// m*phi lies within theta of a multiple of pi, a no-instance when it lies
/// within theta of an odd multiple of pi/2. Equivalently (and how it is
/// decided here, exactly): cos^2(m*phi) >= cos^2(theta) for yes,
/// cos^2(m*phi) <= sin^2(theta) for no.
class LThetaProblem {
 public:
  LThetaProblem(PythagoreanAngle phi, PythagoreanAngle theta);

  const PythagoreanAngle& phi() const { return phi_; }
  const PythagoreanAngle& theta() const { return theta_; }
  const Rational& cos_sq_theta() const { return cos_sq_theta_; }
  const Rational& sin_sq_theta() const { return sin_sq_theta_; }

  /// cos^2(m*phi), exact.
  Rational cos_sq_at(std::uint64_t m, std::size_t bit_budget = kDefaultBitBudget) const;

  PromiseLabel classify(std::uint64_t m,
                        std::size_t bit_budget = kDefaultBitBudget) const;
  PromiseLabel classify_cos_sq(const Rational& cos_sq) const;

  std::shared_ptr<const PowerCache> rotation_powers() const { return rotation_powers_; }

 private:
  PythagoreanAngle phi_;
  PythagoreanAngle theta_;
  Rational cos_sq_theta_;
  Rational sin_sq_theta_;
  std::shared_ptr<const PowerCache> rotation_powers_;
};

/// The modular promise problem on the prime window P_{k,n}: yes-instances
/// are multiples of N (the window product); no-instances have residue
/// m mod p inside [p/8, 3p/8] u [5p/8, 7p/8] for at least 2k/3 of the
/// window primes. All membership tests are integer comparisons.
class LknProblem {
 public:
  LknProblem(std::uint64_t k, std::uint64_t n);

  std::uint64_t k() const { return k_; }
  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const Integer& N() const { return N_; }

  PromiseLabel classify(const Integer& m) const;
  PromiseLabel classify(std::uint64_t m) const;

  /// Number of window primes whose residue of m falls in the interval union.
  std::size_t satisfied_count(const Integer& m) const;

  /// Closed-interval membership 8r in [p,3p] u [5p,7p].
  static bool residue_in_window(std::uint64_t residue, std::uint64_t p);

 private:
  std::uint64_t k_;
  std::uint64_t n_;
  std::vector<std::uint64_t> primes_;
  Integer N_;
};

/// CRT witness for the no-set: the primes indexed by `satisfied` (positions
/// into problem.primes()) get the smallest residue in their interval union
/// (ceil(p/8)); all others get residue 0. Returns K + offset * N.
/// Requires 3*|satisfied| >= 2k; rejects a satisfied set containing p = 2,
/// which has no residue in the union.
Integer generate_no_instance_lkn(const LknProblem& problem,
                                 const std::set<std::size_t>& satisfied,
                                 std::uint64_t offset);

/// All m in [0, limit] that carry a promise, in increasing order.
std::vector<std::pair<std::uint64_t, PromiseLabel>> enumerate_promised(
    const LThetaProblem& problem, std::uint64_t limit,
    std::size_t bit_budget = kDefaultBitBudget);
std::vector<std::pair<std::uint64_t, PromiseLabel>> enumerate_promised(
    const LknProblem& problem, std::uint64_t limit);

}  // namespace plab
