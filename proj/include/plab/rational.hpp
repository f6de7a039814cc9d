#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace plab {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with a positive denominator,
/// so equality and ordering are plain value comparisons. No operation ever
/// rounds; converting to double is explicit (see float_shadow).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}             // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(unsigned long n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "num/den" or a bare integer ("3/5", "-7/25", "5").
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Serialized form: "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  /// Nearest double. Reporting only; never feeds a decision path.
  double to_double() const;

  /// Bits in the larger of |num| and den; the unit of the simulation bit budget.
  std::size_t bit_size() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational squared() const { return *this * *this; }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;  // invariant: canonical (reduced, den > 0)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Nearest double to an exact rational; reporting only.
double float_shadow(const Rational& x);

}  // namespace plab
