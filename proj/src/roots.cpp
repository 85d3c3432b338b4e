#include "dmb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace dmb {

bool canonical_less(const Complex& a, const Complex& b) {
  Real ma = abs(a), mb = abs(b);
  if (ma != mb) return ma < mb;
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

void canonical_sort(std::vector<RootEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RootEntry& x, const RootEntry& y) { return canonical_less(x.value, y.value); });
}

namespace kernels {

namespace {

Complex with_precision(const Complex& z, Precision prec) {
  Complex out(prec);
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  return out;
}

bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

// Correction for root i, relative size stored as log2.
Complex aberth_correction(const std::vector<Complex>& coeffs, const std::vector<Complex>& z, std::size_t i,
                          double& log2_rel) {
  Precision prec = z[i].precision();
  Complex f(prec), df(prec);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    df = df * z[i] + f;
    f = f * z[i] + coeffs[k];
  }
  Complex corr(prec);
  if (is_zero(f)) {
    log2_rel = -std::numeric_limits<double>::infinity();
    return corr;
  }
  Complex w = is_zero(df) ? f : f / df;
  Complex s(prec);
  Complex one(1.0, 0.0, prec);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == i) continue;
    Complex diff = z[i] - z[j];
    if (is_zero(diff)) continue;
    s = s + one / diff;
  }
  Complex den = one - w * s;
  corr = is_zero(den) ? w : w / den;

  Real scale = abs1(z[i]);
  if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
  Real rel = abs1(corr) / scale;
  log2_rel = rel.is_zero() ? -std::numeric_limits<double>::infinity()
                           : static_cast<double>(mpfr_get_exp(rel.get()));
  return corr;
}

}  // namespace

std::vector<Complex> aberth_initial(const std::vector<Complex>& coeffs, Precision prec) {
  std::size_t n = coeffs.size() - 1;
  double lead = std::hypot(coeffs[n].re.to_double(), coeffs[n].im.to_double());
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double a = std::hypot(coeffs[k].re.to_double(), coeffs[k].im.to_double()) / lead;
    if (a > 0) bound = std::max(bound, std::pow(a, 1.0 / static_cast<double>(n - k)));
  }
  double radius = std::max(2.0 * bound, 1e-3);
  std::vector<Complex> z;
  z.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z.emplace_back(radius * std::cos(theta), radius * std::sin(theta), prec);
  }
  return z;
}

double aberth_step_serial(const std::vector<Complex>& coeffs, std::vector<Complex>& z) {
  std::vector<Complex> corr(z.size());
  std::vector<double> rel(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) corr[i] = aberth_correction(coeffs, z, i, rel[i]);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = z[i] - corr[i];
  return *std::max_element(rel.begin(), rel.end());
}

double aberth_step_omp(const std::vector<Complex>& coeffs, std::vector<Complex>& z) {
  const long n = static_cast<long>(z.size());
  std::vector<Complex> corr(z.size());
  std::vector<double> rel(z.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    auto u = static_cast<std::size_t>(i);
    corr[u] = aberth_correction(coeffs, z, u, rel[u]);
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    auto u = static_cast<std::size_t>(i);
    z[u] = z[u] - corr[u];
  }
  return *std::max_element(rel.begin(), rel.end());
}

std::vector<Complex> aberth_solve(const std::vector<Complex>& coeffs, std::vector<Complex> z, Precision prec,
                                  bool parallel, int max_iter) {
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const auto& a : coeffs) c.push_back(with_precision(a, prec));
  for (auto& zi : z) zi = with_precision(zi, prec);
  if (z.size() == 1) {
    z[0] = Complex(0.0, 0.0, prec) - c[0] / c[1];
    return z;
  }
  auto step = parallel ? aberth_step_omp : aberth_step_serial;
  const double target = -static_cast<double>(prec) + 8.0;
  for (int it = 0; it < max_iter; ++it) {
    if (step(c, z) <= target) break;
  }
  step(c, z);
  step(c, z);
  return z;
}

}  // namespace kernels

namespace {

Complex raise(const Complex& z, Precision prec) {
  Complex out(prec);
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  return out;
}

// Weierstrass inclusion radii n|W_i|, W_i = f(z_i) / (lc prod_{j != i} (z_i - z_j)).
// The union of the disks D(z_i, n|W_i|) contains all roots of f, and each
// connected component made of m disks holds exactly m roots.
template <typename Poly>
std::vector<std::optional<Real>> inclusion_radii(const Poly& f, const CInterval& lead,
                                                 const std::vector<Complex>& z) {
  std::vector<std::optional<Real>> radii(z.size());
  const long n = static_cast<long>(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    CInterval zi = CInterval::point(z[i]);
    CInterval den = lead;
    bool ok = true;
    for (std::size_t j = 0; j < z.size() && ok; ++j) {
      if (j == i) continue;
      CInterval diff = zi - CInterval::point(z[j]);
      if (diff.contains_zero()) ok = false;
      den = den * diff;
    }
    if (!ok || norm(den).contains_zero()) continue;
    Interval w = abs(eval_enclosure(f, zi) / den);
    Real r(z[i].precision());
    mpfr_mul_si(r.get(), w.hi().get(), n, MPFR_RNDU);
    radii[i] = std::move(r);
  }
  return radii;
}

bool disks_disjoint(const RootEntry& a, const RootEntry& b) {
  Interval dist = abs(CInterval::point(a.value) - CInterval::point(b.value));
  Real sum(std::max(a.radius.precision(), b.radius.precision()));
  mpfr_add(sum.get(), a.radius.get(), b.radius.get(), MPFR_RNDU);
  return dist.lo() > sum;
}

bool radius_small_enough(const RootEntry& e, Precision prec) {
  // radius <= 2^(-p/2) * max(1, |v|)
  Real scale = abs(e.value);
  if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
  Real limit(scale.precision());
  mpfr_mul_2si(limit.get(), scale.get(), -static_cast<long>(prec / 2), MPFR_RNDD);
  return e.radius <= limit;
}

std::string describe_cluster(const RootEntry& a, const RootEntry& b, Precision prec) {
  std::ostringstream os;
  os << "indistinguishable roots at precision " << prec << ": cluster {" << a.value.re.to_string(12) << "+"
     << a.value.im.to_string(12) << "i, " << b.value.re.to_string(12) << "+" << b.value.im.to_string(12) << "i}";
  return os.str();
}

// Checks pairwise disjointness; on failure returns a description of the offending pair.
std::optional<std::string> find_overlap(const std::vector<RootEntry>& entries, Precision prec) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (!disks_disjoint(entries[i], entries[j])) return describe_cluster(entries[i], entries[j], prec);
    }
  }
  return std::nullopt;
}

std::vector<Complex> to_complex(const ExactPoly& p, Precision prec) {
  std::vector<Complex> c;
  for (const auto& q : p.coeffs()) c.push_back(q.approx(prec));
  return c;
}

}  // namespace

RootSet find_roots(const ExactPoly& p, const RootOptions& opts) {
  if (p.is_zero() || p.degree() == 0) throw std::invalid_argument("root finding needs degree >= 1");
  std::vector<SquareFreeFactor> factors = square_free_decomposition(p);

  Precision prec = opts.precision;
  std::vector<std::vector<Complex>> approx;
  for (const auto& f : factors) approx.push_back(kernels::aberth_initial(to_complex(f.factor, 64), prec));

  std::string failure;
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt, prec *= 2) {
    std::vector<RootEntry> entries;
    bool ok = true;
    for (std::size_t k = 0; k < factors.size() && ok; ++k) {
      const ExactPoly& f = factors[k].factor;
      approx[k] = kernels::aberth_solve(to_complex(f, prec), approx[k], prec, opts.parallel);
      auto radii = inclusion_radii(f, f.leading().enclose(prec), approx[k]);
      for (std::size_t i = 0; i < approx[k].size(); ++i) {
        if (!radii[i]) {
          ok = false;
          failure = "indistinguishable roots at precision " + std::to_string(prec) + ": coincident approximations";
          break;
        }
        RootEntry e{approx[k][i], *radii[i], factors[k].multiplicity};
        if (!radius_small_enough(e, prec)) {
          ok = false;
          failure = "indistinguishable roots at precision " + std::to_string(prec) +
                    ": radius above target near " + e.value.re.to_string(12) + "+" + e.value.im.to_string(12) + "i";
          break;
        }
        entries.push_back(std::move(e));
      }
    }
    if (!ok) continue;
    if (auto overlap = find_overlap(entries, prec)) {
      failure = *overlap;
      continue;
    }
    canonical_sort(entries);
    RootSet out;
    out.entries = std::move(entries);
    out.leading = p.leading().enclose(prec);
    out.leading_is_one = p.leading().is_one();
    out.total_degree = p.degree();
    out.precision = prec;
    out.exact_multiplicities = true;
    return out;
  }
  throw RootCertificationError(failure);
}

RootSet find_roots(const NumericPoly& p, const RootOptions& opts) {
  if (p.degree() == 0) throw std::invalid_argument("root finding needs degree >= 1");
  const std::size_t d = p.degree();
  Precision prec = opts.precision;
  std::vector<Complex> z = kernels::aberth_initial(p.coeffs(), prec);
  CInterval lead = CInterval::point(p.leading());

  double max_coeff = 0.0;
  for (const auto& c : p.coeffs()) max_coeff = std::max(max_coeff, abs(c).to_double());

  std::string failure;
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt, prec *= 2) {
    z = kernels::aberth_solve(p.coeffs(), z, prec, opts.parallel, 200 + 100 * static_cast<int>(d));
    double tol = opts.cluster_tolerance.value_or(std::ldexp(1.0 + max_coeff, -static_cast<int>(prec / 4)));
    auto radii = inclusion_radii(p, lead, z);
    if (std::any_of(radii.begin(), radii.end(), [](const auto& r) { return !r.has_value(); })) {
      failure = "indistinguishable roots at precision " + std::to_string(prec) + ": coincident approximations";
      continue;
    }

    // Union-find on approximations closer than tol.
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (abs(z[i] - z[j]).to_double() <= tol) parent[find(i)] = find(j);
      }
    }
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<long> slot(d, -1);
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t root = find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<long>(clusters.size());
        clusters.emplace_back();
      }
      clusters[static_cast<std::size_t>(slot[root])].push_back(i);
    }

    std::vector<RootEntry> entries;
    for (const auto& members : clusters) {
      Complex centre(prec);
      for (std::size_t i : members) centre = centre + z[i];
      Real count(static_cast<long>(members.size()), prec);
      centre = {centre.re / count, centre.im / count};
      Real radius(prec);
      for (std::size_t i : members) {
        Interval dist = abs(CInterval::point(z[i]) - CInterval::point(centre));
        Real r(prec);
        mpfr_add(r.get(), dist.hi().get(), radii[i]->get(), MPFR_RNDU);
        if (r > radius) radius = r;
      }
      entries.push_back({std::move(centre), std::move(radius), static_cast<int>(members.size())});
    }
    if (auto overlap = find_overlap(entries, prec)) {
      failure = *overlap;
      continue;
    }
    canonical_sort(entries);
    RootSet out;
    out.entries = std::move(entries);
    out.leading = lead;
    out.leading_is_one = p.is_monic();
    out.total_degree = d;
    out.precision = prec;
    out.exact_multiplicities = false;
    return out;
  }
  throw RootCertificationError(failure);
}

RootSet find_roots(const Polynomial& p, const RootOptions& opts) {
  return std::visit([&](const auto& q) { return find_roots(q, opts); }, p);
}

Interval sep(const RootSet& roots, std::size_t j) {
  if (roots.distinct_count() < 2) throw std::invalid_argument("sep: no different root (r = 1)");
  if (j >= roots.distinct_count()) throw std::out_of_range("sep: root index out of range");
  std::optional<Interval> best;
  CInterval vj = roots[j].box();
  for (std::size_t i = 0; i < roots.distinct_count(); ++i) {
    if (i == j) continue;
    Interval d = abs(vj - roots[i].box());
    best = best ? min(*best, d) : d;
  }
  return *best;
}

std::size_t sep_partner(const RootSet& roots, std::size_t j) {
  Interval s = sep(roots, j);
  CInterval vj = roots[j].box();
  for (std::size_t i = 0; i < roots.distinct_count(); ++i) {
    if (i == j) continue;
    if (abs(vj - roots[i].box()).lo() <= s.hi()) return i;
  }
  return j == 0 ? 1 : 0;  // unreachable: the minimum itself qualifies
}

}  // namespace dmb
