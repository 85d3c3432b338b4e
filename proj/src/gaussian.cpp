#include "dmb/gaussian.hpp"

#include <stdexcept>

namespace dmb {

std::string GaussQ::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return "(" + im.get_str() + ")i";
  return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "-") + mpq_class(abs(im)).get_str() + "i)";
}

GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }

GaussQ operator*(const GaussQ& a, const GaussQ& b) {
  if (a.is_real() && b.is_real()) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussQ operator/(const GaussQ& a, const GaussQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (b.is_real()) return {a.re / b.re, a.im / b.re};
  mpq_class n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

}  // namespace dmb
