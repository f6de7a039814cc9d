#include "plab/promise.hpp"

#include <stdexcept>

namespace plab {

const char* to_string(PromiseLabel label) {
  switch (label) {
    case PromiseLabel::Yes: return "Yes";
    case PromiseLabel::No: return "No";
    case PromiseLabel::Unpromised: return "Unpromised";
  }
  return "?";
}

RotationOrbit::RotationOrbit(const PythagoreanAngle& angle, std::size_t bit_budget)
    : RotationOrbit(std::make_shared<PowerCache>(angle.rotation_matrix()), angle,
                    bit_budget) {}

RotationOrbit::RotationOrbit(std::shared_ptr<const PowerCache> powers,
                             const PythagoreanAngle& angle, std::size_t bit_budget)
    : powers_(std::move(powers)),
      cos_phi_(angle.cos()),
      sin_phi_(angle.sin()),
      bit_budget_(bit_budget) {}

void RotationOrbit::seek(std::uint64_t m) {
  RatVector v = powers_->apply({Rational(1), Rational(0)}, m, bit_budget_);
  cos_ = std::move(v[0]);
  sin_ = std::move(v[1]);
  m_ = m;
}

void RotationOrbit::advance() {
  Rational c = cos_phi_ * cos_ - sin_phi_ * sin_;
  Rational s = sin_phi_ * cos_ + cos_phi_ * sin_;
  if (c.bit_size() > bit_budget_ || s.bit_size() > bit_budget_)
    throw BitBudgetError("rotation orbit: entry exceeds the bit budget at m = " +
                         std::to_string(m_ + 1));
  cos_ = std::move(c);
  sin_ = std::move(s);
  ++m_;
}

LThetaProblem::LThetaProblem(PythagoreanAngle phi, PythagoreanAngle theta)
    : phi_(std::move(phi)),
      theta_(std::move(theta)),
      cos_sq_theta_(theta_.cos().squared()),
      sin_sq_theta_(theta_.sin().squared()),
      rotation_powers_(std::make_shared<PowerCache>(phi_.rotation_matrix())) {
  if (!(theta_.sin() < theta_.cos()))
    throw std::invalid_argument("LThetaProblem: theta must satisfy theta < pi/4 (sin < cos)");
}

Rational LThetaProblem::cos_sq_at(std::uint64_t m, std::size_t bit_budget) const {
  RatVector v = rotation_powers_->apply({Rational(1), Rational(0)}, m, bit_budget);
  return v[0].squared();
}

PromiseLabel LThetaProblem::classify_cos_sq(const Rational& cos_sq) const {
  if (cos_sq >= cos_sq_theta_) return PromiseLabel::Yes;
  if (cos_sq <= sin_sq_theta_) return PromiseLabel::No;
  return PromiseLabel::Unpromised;
}

PromiseLabel LThetaProblem::classify(std::uint64_t m, std::size_t bit_budget) const {
  return classify_cos_sq(cos_sq_at(m, bit_budget));
}

LknProblem::LknProblem(std::uint64_t k, std::uint64_t n) : k_(k), n_(n), N_(1) {
  if (k == 0 || n == 0) throw std::invalid_argument("LknProblem: k and n must be >= 1");
  primes_ = prime_window(n, k);
  for (std::uint64_t p : primes_) N_ *= static_cast<unsigned long>(p);
}

bool LknProblem::residue_in_window(std::uint64_t residue, std::uint64_t p) {
  const std::uint64_t r8 = 8 * residue;
  return (r8 >= p && r8 <= 3 * p) || (r8 >= 5 * p && r8 <= 7 * p);
}

std::size_t LknProblem::satisfied_count(const Integer& m) const {
  std::size_t count = 0;
  for (std::uint64_t p : primes_) {
    const std::uint64_t r =
        mpz_fdiv_ui(m.get_mpz_t(), static_cast<unsigned long>(p));
    if (residue_in_window(r, p)) ++count;
  }
  return count;
}

PromiseLabel LknProblem::classify(const Integer& m) const {
  if (m < 0) throw std::invalid_argument("LknProblem: negative input length");
  if (mpz_divisible_p(m.get_mpz_t(), N_.get_mpz_t())) return PromiseLabel::Yes;
  return 3 * satisfied_count(m) >= 2 * k_ ? PromiseLabel::No : PromiseLabel::Unpromised;
}

PromiseLabel LknProblem::classify(std::uint64_t m) const {
  return classify(Integer(std::to_string(m)));
}

Integer generate_no_instance_lkn(const LknProblem& problem,
                                 const std::set<std::size_t>& satisfied,
                                 std::uint64_t offset) {
  const std::uint64_t k = problem.k();
  if (3 * satisfied.size() < 2 * k)
    throw std::invalid_argument(
        "generate_no_instance_lkn: need 3*|satisfied| >= 2k, got |satisfied| = " +
        std::to_string(satisfied.size()) + " for k = " + std::to_string(k));
  for (std::size_t i : satisfied)
    if (i >= k)
      throw std::invalid_argument("generate_no_instance_lkn: prime index out of range");
  std::vector<ResidueConstraint> constraints;
  constraints.reserve(k);
  for (std::size_t i = 0; i < problem.primes().size(); ++i) {
    const std::uint64_t p = problem.primes()[i];
    if (satisfied.count(i)) {
      if (p == 2)
        throw std::invalid_argument(
            "generate_no_instance_lkn: p = 2 has no residue in the interval union and "
            "cannot be satisfied");
      const std::uint64_t r = (p + 7) / 8;  // ceil(p/8), the smallest residue in the union
      constraints.emplace_back(Integer(static_cast<unsigned long>(r)),
                               Integer(static_cast<unsigned long>(p)));
    } else {
      constraints.emplace_back(Integer(0), Integer(static_cast<unsigned long>(p)));
    }
  }
  Integer K = crt_solve(constraints);
  return K + Integer(std::to_string(offset)) * problem.N();
}

std::vector<std::pair<std::uint64_t, PromiseLabel>> enumerate_promised(
    const LThetaProblem& problem, std::uint64_t limit, std::size_t bit_budget) {
  std::vector<std::pair<std::uint64_t, PromiseLabel>> out;
  RotationOrbit orbit(problem.rotation_powers(), problem.phi(), bit_budget);
  for (std::uint64_t m = 0; m <= limit; ++m) {
    if (m > 0) orbit.advance();
    const PromiseLabel label = problem.classify_cos_sq(orbit.cos().squared());
    if (label != PromiseLabel::Unpromised) out.emplace_back(m, label);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, PromiseLabel>> enumerate_promised(
    const LknProblem& problem, std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, PromiseLabel>> out;
  for (std::uint64_t m = 0; m <= limit; ++m) {
    const PromiseLabel label = problem.classify(m);
    if (label != PromiseLabel::Unpromised) out.emplace_back(m, label);
  }
  return out;
}

}  // namespace plab
