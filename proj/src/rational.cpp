#include "plab/rational.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>

namespace plab {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::to_double() const {
  // mpq_get_d truncates; round through a 53-bit mpfr value to get the
  // nearest double instead.
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

std::size_t Rational::bit_size() const {
  const std::size_t nb = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
  const std::size_t db = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
  return nb > db ? nb : db;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

double float_shadow(const Rational& x) { return x.to_double(); }

}  // namespace plab
