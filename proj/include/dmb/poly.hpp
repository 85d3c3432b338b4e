#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dmb/gaussian.hpp"
#include "dmb/interval.hpp"
#include "dmb/mp.hpp"

namespace dmb {

/// Univariate polynomial with exact Q(i) coefficients, lowest degree first.
///
/// The zero polynomial is represented by an empty coefficient list and
/// reported through is_zero(); it has no degree. Every nonzero value has a
/// nonzero leading coefficient.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<GaussQ> coeffs);

  static ExactPoly constant(GaussQ c);
  static ExactPoly x();
  /// c * prod (X - root)^mult.
  static ExactPoly from_roots(const GaussQ& lead, std::span<const std::pair<GaussQ, int>> roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws std::logic_error for the zero polynomial.
  std::size_t degree() const;
  const std::vector<GaussQ>& coeffs() const { return coeffs_; }
  const GaussQ& coeff(std::size_t i) const { return coeffs_[i]; }
  /// Throws std::logic_error for the zero polynomial.
  const GaussQ& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool has_rational_coeffs() const;

  ExactPoly monic() const;
  std::string to_string() const;

  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

 private:
  void normalize();
  std::vector<GaussQ> coeffs_;
};

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator*(const GaussQ& c, const ExactPoly& a);
ExactPoly pow(const ExactPoly& a, unsigned n);

struct DivMod {
  ExactPoly quotient;
  ExactPoly remainder;
};

/// Euclidean division over Q(i). Throws std::domain_error for a zero divisor.
DivMod divmod(const ExactPoly& a, const ExactPoly& b);
/// a / b, throwing std::domain_error if b does not divide a.
ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b);

ExactPoly derivative(const ExactPoly& p);

/// Clears denominators and removes the integer content, leaving a
/// polynomial with coprime Gaussian-integer coefficients. Zero stays zero.
ExactPoly primitive_part(const ExactPoly& p);

/// Monic gcd via a primitive pseudo-remainder sequence.
/// Throws std::invalid_argument if both inputs are zero.
ExactPoly gcd_exact(const ExactPoly& a, const ExactPoly& b);

struct SquareFreeFactor {
  ExactPoly factor;  // monic, square-free
  int multiplicity;
};

/// Yun's algorithm. P = lc(P) * prod factor^multiplicity, factors pairwise
/// coprime, listed by increasing multiplicity.
/// Throws std::invalid_argument for constant input.
std::vector<SquareFreeFactor> square_free_decomposition(const ExactPoly& p);

/// Polynomial with complex floating-point coefficients at a fixed precision.
class NumericPoly {
 public:
  NumericPoly(std::vector<Complex> coeffs, Precision prec);
  static NumericPoly from_exact(const ExactPoly& p, Precision prec);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& leading() const { return coeffs_.back(); }
  Precision precision() const { return prec_; }
  /// Coefficients are stored exactly as given, so an exact-valued leading 1 counts.
  bool is_monic() const;
  std::string to_string() const;

 private:
  std::vector<Complex> coeffs_;
  Precision prec_;
};

/// Numeric derivative, rounded at the polynomial's precision.
NumericPoly derivative(const NumericPoly& p);

using Polynomial = std::variant<ExactPoly, NumericPoly>;

std::size_t degree(const Polynomial& p);
std::string to_string(const Polynomial& p);

/// Horner value together with an a priori rounding-error radius.
struct EvalResult {
  Complex value;
  Real radius;
};

/// Horner evaluation at precision prec. The radius bounds the distance of
/// value from the exact P(z) using gamma_{4d+4} * sum |a_k| |z|^k with unit
/// roundoff 2^-prec.
EvalResult eval(const ExactPoly& p, const Complex& z, Precision prec);
EvalResult eval(const NumericPoly& p, const Complex& z, Precision prec);

/// Interval Horner scheme: an enclosure of {P(z) : z in box}.
CInterval eval_enclosure(const ExactPoly& p, const CInterval& z);
CInterval eval_enclosure(const NumericPoly& p, const CInterval& z);

}  // namespace dmb
