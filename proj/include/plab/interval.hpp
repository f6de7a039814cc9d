#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "plab/rational.hpp"

namespace plab {

/// Raised when an interval is too wide to decide a comparison or a floor.
class IntervalIndeterminate : public std::runtime_error {
 public:
  explicit IntervalIndeterminate(const std::string& what) : std::runtime_error(what) {}
};

/// RAII mpfr_t.
class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  MpfrFloat(const MpfrFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  MpfrFloat& operator=(const MpfrFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  ~MpfrFloat() { mpfr_clear(x_); }

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

/// Closed interval [lo, hi] of 256-bit floats with outward rounding on every
/// operation, so any real produced by the mirrored exact computation is
/// certified to lie inside. Endpoints convert losslessly to dyadic Rationals,
/// which keeps every downstream comparison exact.
class MpfrInterval {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  MpfrInterval() : lo_(kPrecision), hi_(kPrecision) {}

  static MpfrInterval from_rational(const Rational& r);
  static MpfrInterval from_integer(std::int64_t v);
  static MpfrInterval pi();

  MpfrInterval operator+(const MpfrInterval& o) const;
  MpfrInterval operator-(const MpfrInterval& o) const;
  MpfrInterval operator*(const MpfrInterval& o) const;
  MpfrInterval scaled_by(std::uint64_t factor) const;
  MpfrInterval divided_by(std::uint64_t divisor) const;

  MpfrInterval cos() const;
  MpfrInterval sin() const;
  MpfrInterval asin() const;  // requires [lo, hi] within [-1, 1]
  MpfrInterval squared() const;

  /// Exact dyadic endpoints.
  Rational lower() const;
  Rational upper() const;
  Rational width() const { return upper() - lower(); }

  /// Certified comparisons against an exact rational bound; throw
  /// IntervalIndeterminate when the bound cuts through the interval.
  bool certified_ge(const Rational& bound) const;
  bool certified_le(const Rational& bound) const;

  /// floor(x) when it is the same for both endpoints; throws otherwise.
  Integer certified_floor() const;

  double lower_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

 private:
  friend MpfrInterval hull(const MpfrFloat& a, const MpfrFloat& b);
  MpfrFloat lo_;
  MpfrFloat hi_;
};

/// Exact dyadic rational equal to the mpfr value.
Rational mpfr_to_rational(mpfr_srcptr x);

}  // namespace plab
