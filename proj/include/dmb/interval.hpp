#pragma once

#include <algorithm>

#include "dmb/mp.hpp"

namespace dmb {

/// Closed real interval [lo, hi] with outward-rounded MPFR endpoints.
///
/// Every operation returns an enclosure of the exact result set, so a
/// quantity computed through Interval arithmetic from enclosures of the
/// inputs is itself enclosed. Results take the larger operand precision.
class Interval {
 public:
  explicit Interval(Precision prec = 53) : lo_(prec), hi_(prec) {}
  Interval(Real lo, Real hi);

  static Interval point(const Real& x);
  static Interval from_long(long x, Precision prec);
  static Interval from_double(double x, Precision prec);
  static Interval from_rational(const mpq_class& q, Precision prec);
  /// [x - r, x + r] with outward rounding.
  static Interval ball(const Real& x, const Real& r);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Precision precision() const { return std::max(lo_.precision(), hi_.precision()); }

  /// Midpoint rounded to nearest.
  Real mid() const;
  /// Upper bound for the distance from mid() to either endpoint.
  Real rad() const;
  double mid_d() const { return mid().to_double(); }
  double rad_d() const { return rad().to_double(MPFR_RNDU); }

  bool contains(const Real& x) const;
  bool contains_zero() const;
  bool overlaps(const Interval& o) const;
  /// Every point of *this is >= every point of o.
  bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }
  bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }
  bool certainly_positive() const { return lo_.sign() > 0; }

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws std::domain_error when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval exp(const Interval& a);
/// Requires a.lo() > 0.
Interval log(const Interval& a);
/// Integer power of an interval with nonnegative lower end (negative n needs lo > 0).
Interval pow(const Interval& a, long n);
/// Real power of a positive interval; the exponent is an exact enclosure as well.
Interval pow(const Interval& a, const Interval& e);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
/// Interval hull.
Interval hull(const Interval& a, const Interval& b);

/// Rectangular complex interval.
struct CInterval {
  Interval re;
  Interval im;

  explicit CInterval(Precision prec = 53) : re(prec), im(prec) {}
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static CInterval point(const Complex& z);
  /// Box enclosing the disk of radius r centred at z.
  static CInterval disk(const Complex& z, const Real& r);
  static CInterval from_long(long x, Precision prec) {
    return {Interval::from_long(x, prec), Interval::from_long(0, prec)};
  }

  Precision precision() const { return std::max(re.precision(), im.precision()); }
  Complex mid() const { return {re.mid(), im.mid()}; }
  /// Upper bound for the distance from mid() to any point of the box.
  Real rad() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool overlaps(const CInterval& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
/// Throws std::domain_error when |b|^2 is not certainly positive.
CInterval operator/(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a);
Interval abs(const CInterval& a);
Interval norm(const CInterval& a);  // |a|^2
CInterval pow(const CInterval& a, long n);

}  // namespace dmb
