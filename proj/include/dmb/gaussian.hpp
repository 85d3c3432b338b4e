#pragma once

#include <string>

#include <gmpxx.h>

#include "dmb/interval.hpp"

namespace dmb {

/// Exact element of Q(i): re + im*i with GMP rationals.
struct GaussQ {
  mpq_class re;
  mpq_class im;

  GaussQ() = default;
  GaussQ(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussQ conj() const { return {re, -im}; }
  /// re^2 + im^2, exact.
  mpq_class norm() const { return re * re + im * im; }

  CInterval enclose(Precision prec) const {
    return {Interval::from_rational(re, prec), Interval::from_rational(im, prec)};
  }
  Complex approx(Precision prec) const { return {Real(re, prec), Real(im, prec)}; }
  /// Enclosure of |z|.
  Interval abs_enclosure(Precision prec) const { return sqrt(Interval::from_rational(norm(), prec)); }

  std::string to_string() const;
};

GaussQ operator+(const GaussQ& a, const GaussQ& b);
GaussQ operator-(const GaussQ& a, const GaussQ& b);
GaussQ operator-(const GaussQ& a);
GaussQ operator*(const GaussQ& a, const GaussQ& b);
/// Throws std::domain_error on division by zero.
GaussQ operator/(const GaussQ& a, const GaussQ& b);
inline GaussQ& operator+=(GaussQ& a, const GaussQ& b) { return a = a + b; }
inline GaussQ& operator-=(GaussQ& a, const GaussQ& b) { return a = a - b; }
inline GaussQ& operator*=(GaussQ& a, const GaussQ& b) { return a = a * b; }
inline bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }

}  // namespace dmb
