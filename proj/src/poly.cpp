#include "dmb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmb {

ExactPoly::ExactPoly(std::vector<GaussQ> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void ExactPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(GaussQ c) { return ExactPoly({std::move(c)}); }

ExactPoly ExactPoly::x() { return ExactPoly({GaussQ(0), GaussQ(1)}); }

ExactPoly ExactPoly::from_roots(const GaussQ& lead, std::span<const std::pair<GaussQ, int>> roots) {
  ExactPoly p = constant(lead);
  for (const auto& [root, mult] : roots) {
    ExactPoly lin({-root, GaussQ(1)});
    for (int k = 0; k < mult; ++k) p = p * lin;
  }
  return p;
}

std::size_t ExactPoly::degree() const {
  if (is_zero()) throw std::logic_error("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

const GaussQ& ExactPoly::leading() const {
  if (is_zero()) throw std::logic_error("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool ExactPoly::has_rational_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussQ& c) { return c.is_real(); });
}

ExactPoly ExactPoly::monic() const {
  if (is_zero()) return *this;
  GaussQ inv = GaussQ(1) / leading();
  return inv * *this;
}

namespace {

std::string format_coeff(const GaussQ& c) {
  if (c.is_real()) return c.re.get_str();
  std::string s = "(";
  if (sgn(c.re) != 0) s += c.re.get_str() + (sgn(c.im) > 0 ? "+" : "-");
  else if (sgn(c.im) < 0) s += "-";
  s += mpq_class(abs(c.im)).get_str() + "*i)";
  return s;
}

std::string monomial(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

}  // namespace

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const GaussQ& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    bool negative = c.is_real() && sgn(c.re) < 0;
    GaussQ shown = negative ? -c : c;
    if (k == 0) {
      term = format_coeff(shown);
    } else if (shown.is_one()) {
      term = monomial(k);
    } else {
      term = format_coeff(shown) + "*" + monomial(k);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  std::vector<GaussQ> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeff(i);
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeff(i);
  return ExactPoly(std::move(c));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + GaussQ(-1) * b; }

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussQ> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return ExactPoly(std::move(c));
}

ExactPoly operator*(const GaussQ& c, const ExactPoly& a) {
  std::vector<GaussQ> out = a.coeffs();
  for (auto& x : out) x = c * x;
  return ExactPoly(std::move(out));
}

ExactPoly pow(const ExactPoly& a, unsigned n) {
  ExactPoly r = ExactPoly::constant(1);
  for (unsigned k = 0; k < n; ++k) r = r * a;
  return r;
}

DivMod divmod(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {ExactPoly(), a};
  std::vector<GaussQ> rem = a.coeffs();
  std::size_t db = b.degree();
  std::vector<GaussQ> quo(a.degree() - db + 1);
  GaussQ inv = GaussQ(1) / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    GaussQ q = rem[k + db] * inv;
    if (q.is_zero()) continue;
    quo[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
  }
  rem.resize(db);
  return {ExactPoly(std::move(quo)), ExactPoly(std::move(rem))};
}

ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw std::domain_error("polynomial division is not exact");
  return qr.quotient;
}

ExactPoly derivative(const ExactPoly& p) {
  if (p.is_zero() || p.degree() == 0) return {};
  std::vector<GaussQ> c(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) c[k - 1] = GaussQ(static_cast<long>(k)) * p.coeff(k);
  return ExactPoly(std::move(c));
}

ExactPoly primitive_part(const ExactPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im.get_den_mpz_t());
  }
  mpz_class content = 0;
  std::vector<GaussQ> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    GaussQ s(c.re * den, c.im * den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.re.get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.im.get_num_mpz_t());
    out.push_back(std::move(s));
  }
  mpq_class inv(1, content);
  for (auto& c : out) c = GaussQ(c.re * inv, c.im * inv);
  return ExactPoly(std::move(out));
}

namespace {

// lc(b)^k * a mod b without leaving the coefficient ring of a and b.
ExactPoly pseudo_remainder(ExactPoly a, const ExactPoly& b) {
  const GaussQ& lb = b.leading();
  std::size_t db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    std::size_t shift = a.degree() - db;
    std::vector<GaussQ> t(shift + db + 1);
    for (std::size_t j = 0; j <= db; ++j) t[shift + j] = a.leading() * b.coeff(j);
    a = lb * a - ExactPoly(std::move(t));
  }
  return a;
}

}  // namespace

ExactPoly gcd_exact(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  ExactPoly u = primitive_part(a), v = primitive_part(b);
  if (u.is_zero()) return v.monic();
  if (v.is_zero()) return u.monic();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ExactPoly r = primitive_part(pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const ExactPoly& p) {
  if (p.is_zero() || p.degree() == 0) {
    throw std::invalid_argument("square-free decomposition needs a nonconstant polynomial");
  }
  std::vector<SquareFreeFactor> out;
  ExactPoly dp = derivative(p);
  ExactPoly g = gcd_exact(p, dp);
  ExactPoly b = exact_div(p, g).monic();
  ExactPoly d = exact_div(dp, g) * ExactPoly::constant(GaussQ(1) / exact_div(p, g).leading());
  d = d - derivative(b);
  for (int mult = 1; b.degree() > 0; ++mult) {
    ExactPoly a = gcd_exact(b, d);
    if (a.degree() > 0) out.push_back({a, mult});
    b = exact_div(b, a);
    d = exact_div(d, a) - derivative(b);
  }
  return out;
}

NumericPoly::NumericPoly(std::vector<Complex> coeffs, Precision prec) : coeffs_(std::move(coeffs)), prec_(prec) {
  while (coeffs_.size() > 1 && coeffs_.back().re.is_zero() && coeffs_.back().im.is_zero()) coeffs_.pop_back();
  if (coeffs_.empty() || (coeffs_.back().re.is_zero() && coeffs_.back().im.is_zero())) {
    throw std::invalid_argument("numeric polynomial needs a nonzero leading coefficient");
  }
}

NumericPoly NumericPoly::from_exact(const ExactPoly& p, Precision prec) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.approx(prec));
  return NumericPoly(std::move(c), prec);
}

bool NumericPoly::is_monic() const {
  return mpfr_cmp_si(leading().re.get(), 1) == 0 && leading().im.is_zero();
}

std::string NumericPoly::to_string() const {
  int digits = static_cast<int>(static_cast<double>(prec_) * 0.30103) + 3;
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Complex& c = coeffs_[k];
    if (c.re.is_zero() && c.im.is_zero()) continue;
    std::string coeff = "(" + c.re.to_string(digits) + (c.im.sign() < 0 ? "-" : "+") +
                        abs(c.im).to_string(digits) + "*i)";
    if (!out.empty()) out += " + ";
    out += k == 0 ? coeff : coeff + "*" + monomial(k);
  }
  return out.empty() ? "0" : out;
}

NumericPoly derivative(const NumericPoly& p) {
  Precision prec = p.precision();
  if (p.degree() == 0) return NumericPoly({Complex(0.0, 0.0, prec)}, prec);
  std::vector<Complex> c;
  for (std::size_t k = 1; k <= p.degree(); ++k) {
    Real kk(static_cast<long>(k), prec);
    c.push_back({p.coeffs()[k].re * kk, p.coeffs()[k].im * kk});
  }
  // A zero polynomial cannot be represented here; derivative of a
  // nonconstant polynomial never vanishes.
  return NumericPoly(std::move(c), prec);
}

std::size_t degree(const Polynomial& p) {
  return std::visit([](const auto& q) { return q.degree(); }, p);
}

std::string to_string(const Polynomial& p) {
  return std::visit([](const auto& q) { return q.to_string(); }, p);
}

namespace {

EvalResult horner(const std::vector<Complex>& coeffs, const Complex& z, Precision prec) {
  Complex acc(prec);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  // sum |a_k| |z|^k, rounded upward.
  Real az(64), s(64), t(64);
  mpfr_hypot(az.get(), z.re.get(), z.im.get(), MPFR_RNDU);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    mpfr_hypot(t.get(), coeffs[k].re.get(), coeffs[k].im.get(), MPFR_RNDU);
    mpfr_mul(s.get(), s.get(), az.get(), MPFR_RNDU);
    mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDU);
  }
  // gamma_n = n u / (1 - n u), u = 2^-prec.
  long n = 4 * static_cast<long>(coeffs.size()) + 4;
  Real nu(64), gamma(64);
  mpfr_set_si_2exp(nu.get(), n, -prec, MPFR_RNDU);
  mpfr_ui_sub(gamma.get(), 1, nu.get(), MPFR_RNDD);
  mpfr_div(gamma.get(), nu.get(), gamma.get(), MPFR_RNDU);
  mpfr_mul(s.get(), s.get(), gamma.get(), MPFR_RNDU);
  return {std::move(acc), std::move(s)};
}

template <typename Coeffs, typename Enclose>
CInterval horner_enclosure(const Coeffs& coeffs, const CInterval& z, Enclose enclose) {
  Precision prec = z.precision();
  CInterval acc = CInterval::from_long(0, prec);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + enclose(coeffs[k], prec);
  return acc;
}

}  // namespace

EvalResult eval(const ExactPoly& p, const Complex& z, Precision prec) {
  std::vector<Complex> c;
  for (const auto& q : p.coeffs()) c.push_back(q.approx(prec));
  if (c.empty()) c.emplace_back(prec);
  return horner(c, z, prec);
}

EvalResult eval(const NumericPoly& p, const Complex& z, Precision prec) { return horner(p.coeffs(), z, prec); }

CInterval eval_enclosure(const ExactPoly& p, const CInterval& z) {
  return horner_enclosure(p.coeffs(), z, [](const GaussQ& q, Precision prec) { return q.enclose(prec); });
}

CInterval eval_enclosure(const NumericPoly& p, const CInterval& z) {
  return horner_enclosure(p.coeffs(), z, [](const Complex& c, Precision) { return CInterval::point(c); });
}

}  // namespace dmb
