#include "dmb/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmb {

namespace {

Precision pmax(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(BinOp op, const Real& x, const Real& y, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  op(r.get(), x.get(), y.get(), rnd);
  return r;
}

const Real& rmin(const Real& a, const Real& b) { return a <= b ? a : b; }
const Real& rmax(const Real& a, const Real& b) { return a >= b ? a : b; }

// Corner evaluation for operations monotone in each argument separately.
Interval corners(BinOp op, const Interval& a, const Interval& b) {
  Precision p = pmax(a, b);
  Real l1 = apply(op, a.lo(), b.lo(), p, MPFR_RNDD);
  Real l2 = apply(op, a.lo(), b.hi(), p, MPFR_RNDD);
  Real l3 = apply(op, a.hi(), b.lo(), p, MPFR_RNDD);
  Real l4 = apply(op, a.hi(), b.hi(), p, MPFR_RNDD);
  Real h1 = apply(op, a.lo(), b.lo(), p, MPFR_RNDU);
  Real h2 = apply(op, a.lo(), b.hi(), p, MPFR_RNDU);
  Real h3 = apply(op, a.hi(), b.lo(), p, MPFR_RNDU);
  Real h4 = apply(op, a.hi(), b.hi(), p, MPFR_RNDU);
  return {rmin(rmin(l1, l2), rmin(l3, l4)), rmax(rmax(h1, h2), rmax(h3, h4))};
}

}  // namespace

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || lo_ > hi_) {
    throw std::domain_error("invalid interval bounds");
  }
}

Interval Interval::point(const Real& x) { return {x, x}; }

Interval Interval::from_long(long x, Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_set_si(lo.get(), x, MPFR_RNDD);
  mpfr_set_si(hi.get(), x, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval Interval::from_double(double x, Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_set_d(lo.get(), x, MPFR_RNDD);
  mpfr_set_d(hi.get(), x, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval Interval::from_rational(const mpq_class& q, Precision prec) {
  return {Real(q, prec, MPFR_RNDD), Real(q, prec, MPFR_RNDU)};
}

Interval Interval::ball(const Real& x, const Real& r) {
  Precision p = std::max(x.precision(), r.precision());
  return {apply(mpfr_sub, x, r, p, MPFR_RNDD), apply(mpfr_add, x, r, p, MPFR_RNDU)};
}

Real Interval::mid() const {
  Real m(precision());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Real Interval::rad() const {
  Real m = mid();
  Real a = apply(mpfr_sub, hi_, m, precision(), MPFR_RNDU);
  Real b = apply(mpfr_sub, m, lo_, precision(), MPFR_RNDU);
  return a >= b ? a : b;
}

bool Interval::contains(const Real& x) const { return lo_ <= x && x <= hi_; }
bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
bool Interval::overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

Interval operator+(const Interval& a, const Interval& b) {
  Precision p = pmax(a, b);
  return {apply(mpfr_add, a.lo(), b.lo(), p, MPFR_RNDD), apply(mpfr_add, a.hi(), b.hi(), p, MPFR_RNDU)};
}

Interval operator-(const Interval& a, const Interval& b) {
  Precision p = pmax(a, b);
  return {apply(mpfr_sub, a.lo(), b.hi(), p, MPFR_RNDD), apply(mpfr_sub, a.hi(), b.lo(), p, MPFR_RNDU)};
}

Interval operator*(const Interval& a, const Interval& b) { return corners(mpfr_mul, a, b); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  return corners(mpfr_div, a, b);
}

Interval operator-(const Interval& a) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  Real hi(a.precision());
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  if (hi < a.hi()) hi = a.hi();
  return {Real(a.precision()), std::move(hi)};
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  Precision p = a.precision();
  return {apply(mpfr_mul, m.lo(), m.lo(), p, MPFR_RNDD), apply(mpfr_mul, m.hi(), m.hi(), p, MPFR_RNDU)};
}

Interval sqrt(const Interval& a) {
  if (a.hi().sign() < 0) throw std::domain_error("sqrt of a negative interval");
  Precision p = a.precision();
  Real lo(p), hi(p);
  if (a.lo().sign() > 0) mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval exp(const Interval& a) {
  Precision p = a.precision();
  Real lo(p), hi(p);
  mpfr_exp(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), a.hi().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval log(const Interval& a) {
  if (!a.certainly_positive()) throw std::domain_error("log of a non-positive interval");
  Precision p = a.precision();
  Real lo(p), hi(p);
  mpfr_log(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), a.hi().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval pow(const Interval& a, long n) {
  Precision p = a.precision();
  if (n == 0) return Interval::from_long(1, p);
  auto pw = [&](const Real& x, mpfr_rnd_t rnd) {
    Real r(p);
    mpfr_pow_si(r.get(), x.get(), n, rnd);
    return r;
  };
  if (n < 0) {
    if (!a.certainly_positive()) throw std::domain_error("negative power of a non-positive interval");
    return {pw(a.hi(), MPFR_RNDD), pw(a.lo(), MPFR_RNDU)};
  }
  if (n % 2 == 0) {
    Interval m = abs(a);
    return {pw(m.lo(), MPFR_RNDD), pw(m.hi(), MPFR_RNDU)};
  }
  return {pw(a.lo(), MPFR_RNDD), pw(a.hi(), MPFR_RNDU)};
}

Interval pow(const Interval& a, const Interval& e) {
  if (a.lo().sign() < 0 || (a.lo().sign() == 0 && e.lo().sign() <= 0)) {
    throw std::domain_error("real power needs a positive base");
  }
  return corners(mpfr_pow, a, e);
}

Interval max(const Interval& a, const Interval& b) {
  return {rmax(a.lo(), b.lo()), rmax(a.hi(), b.hi())};
}

Interval min(const Interval& a, const Interval& b) {
  return {rmin(a.lo(), b.lo()), rmin(a.hi(), b.hi())};
}

Interval hull(const Interval& a, const Interval& b) {
  return {rmin(a.lo(), b.lo()), rmax(a.hi(), b.hi())};
}

CInterval CInterval::point(const Complex& z) { return {Interval::point(z.re), Interval::point(z.im)}; }

CInterval CInterval::disk(const Complex& z, const Real& r) {
  return {Interval::ball(z.re, r), Interval::ball(z.im, r)};
}

Real CInterval::rad() const {
  Real a = re.rad(), b = im.rad();
  Real h(precision());
  mpfr_hypot(h.get(), a.get(), b.get(), MPFR_RNDU);
  return h;
}

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }
CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }

CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval operator/(const CInterval& a, const CInterval& b) {
  Interval den = norm(b);
  if (!den.certainly_positive()) throw std::domain_error("complex interval division by zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Interval norm(const CInterval& a) { return sqr(a.re) + sqr(a.im); }

Interval abs(const CInterval& a) { return sqrt(norm(a)); }

CInterval pow(const CInterval& a, long n) {
  if (n < 0) throw std::domain_error("negative complex power");
  CInterval result = CInterval::from_long(1, a.precision());
  CInterval base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace dmb
