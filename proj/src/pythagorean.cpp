#include "plab/pythagorean.hpp"

#include <stdexcept>

namespace plab {

bool rational_sqrt(const Rational& x, Rational& out) {
  if (x.sign() < 0) return false;
  if (!mpz_perfect_square_p(x.num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.den().get_mpz_t()))
    return false;
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), x.num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), x.den().get_mpz_t());
  out = Rational(num_root, den_root);
  return true;
}

PythagoreanAngle::PythagoreanAngle(Rational sin, Rational cos)
    : sin_(std::move(sin)), cos_(std::move(cos)) {
  const Rational one(1);
  if (sin_.squared() + cos_.squared() != one)
    throw std::invalid_argument("PythagoreanAngle: sin^2 + cos^2 != 1 (" + sin_.str() +
                                ", " + cos_.str() + ")");
  if (sin_.sign() <= 0 || sin_ >= one || cos_.sign() <= 0 || cos_ >= one)
    throw std::invalid_argument(
        "PythagoreanAngle: sin and cos must lie strictly in (0, 1)");
}

PythagoreanAngle PythagoreanAngle::from_sin(const Rational& sin) {
  Rational cos;
  if (!rational_sqrt(Rational(1) - sin.squared(), cos))
    throw std::invalid_argument("PythagoreanAngle: 1 - sin^2 is not a rational square for sin = " +
                                sin.str());
  return PythagoreanAngle(sin, cos);
}

RatMatrix PythagoreanAngle::rotation_matrix() const {
  RatMatrix m(2);
  m.at(0, 0) = cos_;
  m.at(0, 1) = -sin_;
  m.at(1, 0) = sin_;
  m.at(1, 1) = cos_;
  return m;
}

}  // namespace plab
