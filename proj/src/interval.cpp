#include "plab/interval.hpp"

#include <algorithm>

namespace plab {

namespace {
constexpr mpfr_prec_t P = MpfrInterval::kPrecision;
}

Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw std::domain_error("mpfr_to_rational: non-finite value");
  Integer mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  if (e >= 0) {
    Integer num;
    mpz_mul_2exp(num.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(num);
  }
  Integer den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(mant, den);
}

MpfrInterval hull(const MpfrFloat& a, const MpfrFloat& b) {
  MpfrInterval out;
  if (mpfr_cmp(a.get(), b.get()) <= 0) {
    out.lo_ = a;
    out.hi_ = b;
  } else {
    out.lo_ = b;
    out.hi_ = a;
  }
  return out;
}

MpfrInterval MpfrInterval::from_rational(const Rational& r) {
  MpfrInterval out;
  mpfr_set_q(out.lo_.get(), r.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), r.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::from_integer(std::int64_t v) {
  MpfrInterval out;
  mpfr_set_si(out.lo_.get(), static_cast<long>(v), MPFR_RNDD);
  mpfr_set_si(out.hi_.get(), static_cast<long>(v), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::pi() {
  MpfrInterval out;
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::operator+(const MpfrInterval& o) const {
  MpfrInterval out;
  mpfr_add(out.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::operator-(const MpfrInterval& o) const {
  MpfrInterval out;
  mpfr_sub(out.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::operator*(const MpfrInterval& o) const {
  // min/max over the four endpoint products, each with directed rounding.
  MpfrFloat lo(P), hi(P), t(P);
  bool first = true;
  const MpfrFloat* xs[2] = {&lo_, &hi_};
  const MpfrFloat* ys[2] = {&o.lo_, &o.hi_};
  for (const auto* x : xs) {
    for (const auto* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  MpfrInterval out;
  out.lo_ = lo;
  out.hi_ = hi;
  return out;
}

MpfrInterval MpfrInterval::scaled_by(std::uint64_t factor) const {
  MpfrInterval out;
  mpfr_mul_ui(out.lo_.get(), lo_.get(), static_cast<unsigned long>(factor), MPFR_RNDD);
  mpfr_mul_ui(out.hi_.get(), hi_.get(), static_cast<unsigned long>(factor), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::divided_by(std::uint64_t divisor) const {
  if (divisor == 0) throw std::domain_error("MpfrInterval: division by zero");
  MpfrInterval out;
  mpfr_div_ui(out.lo_.get(), lo_.get(), static_cast<unsigned long>(divisor), MPFR_RNDD);
  mpfr_div_ui(out.hi_.get(), hi_.get(), static_cast<unsigned long>(divisor), MPFR_RNDU);
  return out;
}

namespace {

// f over [lo, hi] for |f'| <= 1 (sin, cos): endpoint values with directed
// rounding, widened by the interval width. Exact for the hair-thin intervals
// this project produces; never tight for wide ones, but always certified.
MpfrInterval lipschitz_envelope(const MpfrFloat& lo, const MpfrFloat& hi,
                                int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                                double clamp_lo, double clamp_hi) {
  MpfrFloat flo(P), a(P), b(P), w(P);
  f(a.get(), lo.get(), MPFR_RNDD);
  f(b.get(), hi.get(), MPFR_RNDD);
  if (mpfr_cmp(a.get(), b.get()) > 0) mpfr_set(a.get(), b.get(), MPFR_RNDD);
  f(flo.get(), lo.get(), MPFR_RNDU);
  f(b.get(), hi.get(), MPFR_RNDU);
  if (mpfr_cmp(flo.get(), b.get()) < 0) mpfr_set(flo.get(), b.get(), MPFR_RNDU);
  // a = min down, flo = max up; widen both by the width.
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  mpfr_sub(a.get(), a.get(), w.get(), MPFR_RNDD);
  mpfr_add(flo.get(), flo.get(), w.get(), MPFR_RNDU);
  if (mpfr_cmp_d(a.get(), clamp_lo) < 0) mpfr_set_d(a.get(), clamp_lo, MPFR_RNDD);
  if (mpfr_cmp_d(flo.get(), clamp_hi) > 0) mpfr_set_d(flo.get(), clamp_hi, MPFR_RNDU);
  return hull(a, flo);
}

}  // namespace

MpfrInterval MpfrInterval::cos() const {
  return lipschitz_envelope(lo_, hi_, mpfr_cos, -1.0, 1.0);
}

MpfrInterval MpfrInterval::sin() const {
  return lipschitz_envelope(lo_, hi_, mpfr_sin, -1.0, 1.0);
}

MpfrInterval MpfrInterval::asin() const {
  if (mpfr_cmp_si(lo_.get(), -1) < 0 || mpfr_cmp_si(hi_.get(), 1) > 0)
    throw std::domain_error("MpfrInterval::asin: interval outside [-1, 1]");
  MpfrInterval out;
  mpfr_asin(out.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_asin(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

MpfrInterval MpfrInterval::squared() const {
  MpfrInterval out;
  if (mpfr_sgn(lo_.get()) >= 0) {
    mpfr_sqr(out.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqr(out.hi_.get(), hi_.get(), MPFR_RNDU);
  } else if (mpfr_sgn(hi_.get()) <= 0) {
    mpfr_sqr(out.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_sqr(out.hi_.get(), lo_.get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(out.lo_.get(), 1);
    MpfrFloat a(P), b(P);
    mpfr_sqr(a.get(), lo_.get(), MPFR_RNDU);
    mpfr_sqr(b.get(), hi_.get(), MPFR_RNDU);
    mpfr_set(out.hi_.get(), mpfr_cmp(a.get(), b.get()) >= 0 ? a.get() : b.get(),
             MPFR_RNDU);
  }
  return out;
}

Rational MpfrInterval::lower() const { return mpfr_to_rational(lo_.get()); }
Rational MpfrInterval::upper() const { return mpfr_to_rational(hi_.get()); }

bool MpfrInterval::certified_ge(const Rational& bound) const {
  if (lower() >= bound) return true;
  if (upper() < bound) return false;
  throw IntervalIndeterminate("interval straddles the bound " + bound.str());
}

bool MpfrInterval::certified_le(const Rational& bound) const {
  if (upper() <= bound) return true;
  if (lower() > bound) return false;
  throw IntervalIndeterminate("interval straddles the bound " + bound.str());
}

Integer MpfrInterval::certified_floor() const {
  MpfrFloat fl(P), fh(P);
  mpfr_floor(fl.get(), lo_.get());
  mpfr_floor(fh.get(), hi_.get());
  if (!mpfr_equal_p(fl.get(), fh.get()))
    throw IntervalIndeterminate("interval spans an integer; floor is ambiguous");
  Integer out;
  mpfr_get_z(out.get_mpz_t(), fl.get(), MPFR_RNDN);
  return out;
}

}  // namespace plab
