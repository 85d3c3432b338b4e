#include "dmb/invariants.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace dmb {

Interval mahler_measure(const RootSet& roots) {
  Precision prec = roots.precision;
  Interval one = Interval::from_long(1, prec);
  Interval m = abs(roots.leading);
  for (const auto& e : roots.entries) m = m * pow(max(one, abs(e.box())), e.multiplicity);
  return m;
}

JensenEstimate mahler_measure_jensen(const Polynomial& p, const RootSet& roots, std::size_t nodes) {
  Interval one = Interval::from_long(1, roots.precision);
  Interval tol = Interval::from_double(1e-6, roots.precision);
  for (const auto& e : roots.entries) {
    if (!abs(abs(e.box()) - one).certainly_gt(tol)) {
      throw JensenUnavailable("jensen oracle unavailable: root within 1e-6 of the unit circle");
    }
  }
  using C = std::complex<long double>;
  std::vector<C> c;
  if (const auto* ex = std::get_if<ExactPoly>(&p)) {
    for (const auto& q : ex->coeffs()) c.emplace_back(q.re.get_d(), q.im.get_d());
  } else {
    for (const auto& q : std::get<NumericPoly>(p).coeffs()) {
      c.emplace_back(mpfr_get_ld(q.re.get(), MPFR_RNDN), mpfr_get_ld(q.im.get(), MPFR_RNDN));
    }
  }
  auto mean_log = [&](std::size_t n) {
    long double sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n);
      C z = std::polar(1.0L, theta), acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
      sum += std::log(std::abs(acc));
    }
    return sum / static_cast<long double>(n);
  };
  // The trapezoidal rule converges geometrically at a rate set by the root
  // closest to the circle, so keep doubling until two levels agree.
  constexpr std::size_t kMaxNodes = std::size_t{1} << 20;
  std::size_t n = std::max<std::size_t>(nodes, 8);
  long double coarse = std::exp(mean_log(n));
  long double fine = std::exp(mean_log(2 * n));
  while (std::fabs(fine - coarse) > 1e-13L * fine && 4 * n <= kMaxNodes) {
    n *= 2;
    coarse = fine;
    fine = std::exp(mean_log(2 * n));
  }
  return {static_cast<double>(fine), static_cast<double>(std::fabs(fine - coarse))};
}

Interval sdisc_abs_from_roots(const RootSet& roots) {
  Precision prec = roots.precision;
  const std::size_t r = roots.distinct_count();
  Interval out = pow(norm(roots.leading), static_cast<long>(r) - 1);
  long mult = 1;
  for (const auto& e : roots.entries) mult *= e.multiplicity;
  out = out * Interval::from_long(mult, prec);
  for (std::size_t i = 0; i < r; ++i) {
    CInterval vi = roots[i].box();
    for (std::size_t j = i + 1; j < r; ++j) out = out * norm(vi - roots[j].box());
  }
  return out;
}

GaussQ determinant(std::vector<std::vector<GaussQ>> m) {
  const std::size_t n = m.size();
  GaussQ det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return GaussQ(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    GaussQ inv = GaussQ(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      GaussQ f = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

namespace {

// Gaussian integer used by the fraction-free elimination below.
struct GaussZ {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussZ mul(const GaussZ& a, const GaussZ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GaussZ sub(const GaussZ& a, const GaussZ& b) { return {a.re - b.re, a.im - b.im}; }

// a / b where b is known to divide a in Z[i].
GaussZ exact_quotient(const GaussZ& a, const GaussZ& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {re, im};
}

// Bareiss elimination; every intermediate entry is a minor, so all
// divisions are exact.
GaussZ bareiss(std::vector<std::vector<GaussZ>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1, 0};
  GaussZ prev{1, 0};
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return {0, 0};
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t k = c + 1; k < n; ++k) {
        m[i][k] = exact_quotient(sub(mul(m[i][k], m[c][c]), mul(m[i][c], m[c][k])), prev);
      }
    }
    prev = m[c][c];
  }
  GaussZ det = m[n - 1][n - 1];
  if (negate) det = {-det.re, -det.im};
  return det;
}

// Positive integer L with L * p having Gaussian-integer coefficients.
mpz_class denominator_lcm(const ExactPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den_mpz_t());
  }
  return l;
}

std::vector<GaussZ> integer_coeffs(const ExactPoly& p, const mpz_class& l) {
  std::vector<GaussZ> out;
  for (const auto& c : p.coeffs()) {
    mpq_class re = c.re * l, im = c.im * l;
    out.push_back({re.get_num(), im.get_num()});
  }
  return out;
}

// sRes_j(p, q) as the determinant of the leading square block of the
// Sylvester-Habicht matrix: rows X^s p (s = dq-j-1..0) then X^s q
// (s = dp-j-1..0), columns X^{dp+dq-j-1} .. X^j.
GaussQ principal_subresultant(const ExactPoly& p, const ExactPoly& q, std::size_t j) {
  const std::size_t dp = p.degree(), dq = q.degree();
  const mpz_class lp = denominator_lcm(p), lq = denominator_lcm(q);
  const std::vector<GaussZ> pc = integer_coeffs(p, lp), qc = integer_coeffs(q, lq);
  const std::size_t size = dp + dq - 2 * j;
  const std::size_t top = dp + dq - j - 1;
  std::vector<std::vector<GaussZ>> m;
  auto push_rows = [&](const std::vector<GaussZ>& coeffs, std::size_t count) {
    const std::size_t deg = coeffs.size() - 1;
    for (std::size_t s = count; s-- > 0;) {
      std::vector<GaussZ> row(size, GaussZ{0, 0});
      for (std::size_t c = 0; c < size; ++c) {
        std::size_t power = top - c;
        if (power >= s && power - s <= deg) row[c] = coeffs[power - s];
      }
      m.push_back(std::move(row));
    }
  };
  push_rows(pc, dq - j);
  push_rows(qc, dp - j);
  GaussZ det = bareiss(std::move(m));
  // Undo the row scaling: lp^{dq-j} lq^{dp-j}.
  mpz_class scale, tmp;
  mpz_pow_ui(scale.get_mpz_t(), lp.get_mpz_t(), dq - j);
  mpz_pow_ui(tmp.get_mpz_t(), lq.get_mpz_t(), dp - j);
  scale *= tmp;
  mpq_class re(det.re, scale), im(det.im, scale);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

std::vector<GaussQ> principal_subresultants(const ExactPoly& p, const ExactPoly& q) {
  if (p.degree() <= q.degree()) throw std::invalid_argument("principal_subresultants needs deg p > deg q");
  std::vector<GaussQ> out;
  for (std::size_t j = 0; j <= q.degree(); ++j) out.push_back(principal_subresultant(p, q, j));
  return out;
}

Subdiscriminant sdisc_from_subresultants(const ExactPoly& p) {
  if (p.is_zero() || p.degree() == 0) throw std::invalid_argument("subdiscriminant needs degree >= 1");
  const ExactPoly dp = derivative(p);
  if (dp.is_zero()) throw std::logic_error("derivative vanishes");
  for (std::size_t j = 0; j <= dp.degree(); ++j) {
    GaussQ s = principal_subresultant(p, dp, j);
    if (s.is_zero()) continue;
    // Sign (-1)^{(d-j)(d-j-1)/2} makes index 0 coincide with Disc(P).
    const std::size_t n = p.degree() - j;
    GaussQ v = s / p.leading();
    return {j, (n * (n - 1) / 2) % 2 == 1 ? -v : v};
  }
  // sRes_{d-1}(P, P') = d * a_d is never zero.
  throw std::logic_error("no nonvanishing principal subresultant");
}

GaussQ discriminant(const ExactPoly& p) {
  if (p.is_zero() || p.degree() < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  const std::size_t d = p.degree();
  GaussQ disc = principal_subresultant(p, derivative(p), 0) / p.leading();
  return (d * (d - 1) / 2) % 2 == 1 ? -disc : disc;
}

InvariantBundle compute_invariants(const Polynomial& poly, const RootSet& roots) {
  Precision prec = roots.precision;
  InvariantBundle b{mahler_measure(roots), std::nullopt, Interval(prec), 0, roots.total_degree,
                    roots.distinct_count(), std::nullopt, std::nullopt};
  if (const auto* p = std::get_if<ExactPoly>(&poly)) {
    Subdiscriminant s = sdisc_from_subresultants(*p);
    if (s.index != b.degree - b.distinct) {
      throw std::logic_error("subresultant index d - r disagrees with the square-free decomposition");
    }
    b.sdisc_index = s.index;
    b.sdisc_abs = s.abs_enclosure(prec);
    b.sdisc_exact = s.value;
    if (b.degree >= 2) {
      GaussQ disc = discriminant(*p);
      b.disc_abs = disc.abs_enclosure(prec);
      b.disc_exact = disc;
    }
  } else {
    b.sdisc_index = b.degree - b.distinct;
    b.sdisc_abs = sdisc_abs_from_roots(roots);
    if (b.degree >= 2) b.disc_abs = b.distinct == b.degree ? b.sdisc_abs : Interval::from_long(0, prec);
  }
  return b;
}

}  // namespace dmb
