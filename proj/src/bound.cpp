#include "dmb/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dmb/divdiff.hpp"

namespace dmb {

Analysis analyze(const Polynomial& p, const RootOptions& opts) {
  RootSet roots = find_roots(p, opts);
  InvariantBundle inv = compute_invariants(p, roots);
  return {p, std::move(roots), std::move(inv)};
}

// ---------------------------------------------------------------------------

AuxLemmaCheck lemma_aux_check(long d, long r) {
  if (d < 0 || d > r - 1) throw std::invalid_argument("lemma_aux_check needs 0 <= d <= r - 1");
  auto binom = [](long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
  };
  mpz_class lhs2 = 0;
  for (long i = d; i <= r - 1; ++i) {
    mpz_class b = binom(i, d);
    lhs2 += b * b;
  }
  mpz_class c = binom(r - 1, d);
  mpq_class mid2 = mpq_class(c * c) * mpq_class(r + d, 2 * d + 1);
  mid2.canonicalize();
  mpq_class rhs2 = r;
  mpq_class base(r * r, 3);
  base.canonicalize();
  for (long k = 0; k < d; ++k) rhs2 *= base;

  AuxLemmaCheck out{};
  out.lhs_le_mid = mpq_class(lhs2) <= mid2;
  out.mid_le_rhs = mid2 <= rhs2;
  out.lhs = std::sqrt(lhs2.get_d());
  out.mid = std::sqrt(mid2.get_d());
  out.rhs = std::pow(static_cast<double>(r) / std::sqrt(3.0), static_cast<double>(d)) *
            std::sqrt(static_cast<double>(r));
  return out;
}

MultiplicityCheck multiplicity_product_bound(std::span<const int> m) {
  if (m.empty()) throw std::invalid_argument("multiplicity list is empty");
  long d = 0;
  mpz_class product = 1;
  for (int mi : m) {
    if (mi < 1) throw std::invalid_argument("multiplicities must be positive");
    d += mi;
    product *= mi;
  }
  const long r = static_cast<long>(m.size());
  const long e = std::min(d, 2 * d - 2 * r);
  mpz_class three_e;
  mpz_ui_pow_ui(three_e.get_mpz_t(), 3, static_cast<unsigned long>(e));
  mpz_class cube = product * product * product;
  return {product, std::pow(3.0, static_cast<double>(e) / 3.0), cube <= three_e};
}

// ---------------------------------------------------------------------------

CMatrix vandermonde_matrix(const RootSet& roots) {
  const std::size_t r = roots.distinct_count();
  CMatrix w(r);
  for (std::size_t j = 0; j < r; ++j) {
    CInterval v = roots[j].box();
    CInterval pw = CInterval::from_long(1, roots.precision);
    for (std::size_t k = 0; k < r; ++k) {
      w[j].push_back(pw);
      pw = pw * v;
    }
  }
  return w;
}

CInterval interval_determinant(CMatrix m) {
  const std::size_t n = m.size();
  Precision prec = n == 0 ? 53 : m[0][0].precision();
  CInterval det = CInterval::from_long(1, prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> pivot;
    Real best(prec);
    for (std::size_t row = col; row < n; ++row) {
      if (m[row][col].contains_zero()) continue;
      Real mag = abs(m[row][col].mid());
      if (!pivot || mag > best) {
        pivot = row;
        best = mag;
      }
    }
    if (!pivot) throw std::domain_error("no certified nonzero pivot");
    if (*pivot != col) {
      std::swap(m[*pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      CInterval f = m[row][col] / m[col][col];
      for (std::size_t k = col + 1; k < n; ++k) m[row][k] = m[row][k] - f * m[col][k];
    }
  }
  return det;
}

namespace {

Interval ratio_r_sqrt3(std::size_t r, Precision prec) {
  return Interval::from_long(static_cast<long>(r), prec) / sqrt(Interval::from_long(3, prec));
}

Interval max_one_abs(const RootSet& roots, std::size_t j) {
  return max(Interval::from_long(1, roots.precision), abs(roots[j].box()));
}

}  // namespace

RowNormCheck row_norm_bound(const RootSet& roots, std::span<const CInterval> row, std::size_t j,
                            std::size_t in_degree) {
  Precision prec = roots.precision;
  const std::size_t r = roots.distinct_count();
  Interval sum = Interval::from_long(0, prec);
  for (const auto& x : row) sum = sum + norm(x);
  Interval bound = pow(ratio_r_sqrt3(r, prec), static_cast<long>(in_degree)) *
                   sqrt(Interval::from_long(static_cast<long>(r), prec)) *
                   pow(max_one_abs(roots, j), static_cast<long>(r - 1 - in_degree));
  return {sqrt(sum), std::move(bound)};
}

Interval hadamard_bound(const RootSet& roots, const RootGraph& g) {
  Precision prec = roots.precision;
  const std::size_t r = roots.distinct_count();
  Interval sqrt_r = sqrt(Interval::from_long(static_cast<long>(r), prec));
  Interval out = pow(ratio_r_sqrt3(r, prec), static_cast<long>(g.edge_count())) * pow(sqrt_r, static_cast<long>(r));
  for (std::size_t j = 0; j < r; ++j) out = out * pow(max_one_abs(roots, j), static_cast<long>(r - 1 - g.in_degree(j)));
  return out;
}

VandermondeCertificate reduce_vandermonde(const RootSet& roots, const RootGraph& g) {
  if (g.vertex_count() != roots.distinct_count()) {
    throw GraphError("graph vertex count does not match the number of distinct roots");
  }
  const std::size_t r = roots.distinct_count();
  Precision prec = roots.precision;
  VandermondeCertificate cert;
  CMatrix w = vandermonde_matrix(roots);
  cert.matrices.push_back(w);
  CMatrix current = w;
  CInterval product = CInterval::from_long(1, prec);
  for (std::size_t j = r; j-- > 1;) {
    std::vector<std::size_t> tails = g.incoming(j);
    CInterval factor = CInterval::from_long(1, prec);
    if (!tails.empty()) {
      std::vector<CInterval> nodes;
      std::vector<std::vector<CInterval>> rows;
      for (std::size_t t : tails) {
        nodes.push_back(roots[t].box());
        rows.push_back(w[t]);  // rows of earlier vertices are still F(v_t)
        factor = factor * (roots[j].box() - roots[t].box());
      }
      nodes.push_back(roots[j].box());
      rows.push_back(w[j]);
      current[j] = divdiff_vector(rows, NodeList(std::move(nodes)));
    }
    product = product * factor;
    cert.step_factors.push_back(factor);
    cert.matrices.push_back(current);
  }
  cert.edge_product = product;

  try {
    cert.det_w = interval_determinant(w);
    cert.det_w1 = interval_determinant(current);
    CInterval residual = cert.det_w - cert.det_w1 * product;
    cert.identity_certified = residual.contains_zero();
    Real ref = abs(cert.det_w.mid());
    Real diff = abs((cert.det_w1 * product).mid() - cert.det_w.mid());
    cert.relative_discrepancy = ref.is_zero() ? diff.to_double() : (diff / ref).to_double();
  } catch (const std::domain_error&) {
    cert.identity_certified = false;
    cert.relative_discrepancy = std::numeric_limits<double>::infinity();
  }

  bool rows_ok = true;
  for (std::size_t j = 0; j < r; ++j) {
    cert.rows.push_back(row_norm_bound(roots, current[j], j, g.in_degree(j)));
    rows_ok = rows_ok && cert.rows.back().holds();
  }
  cert.hadamard_rhs = hadamard_bound(roots, g);
  cert.hadamard_certified = rows_ok && abs(cert.det_w1).lo() <= cert.hadamard_rhs.hi();
  return cert;
}

// ---------------------------------------------------------------------------

std::string to_string(Variant v) {
  switch (v) {
    case Variant::classical: return "classical";
    case Variant::main: return "main";
    case Variant::remark_degree: return "remark_degree";
    case Variant::remark_pairs: return "remark_pairs";
    case Variant::sep_product: return "sep_product";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(const std::string& name) {
  for (Variant v : {Variant::classical, Variant::main, Variant::remark_degree, Variant::remark_pairs,
                    Variant::sep_product}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::violated: return "violated";
  }
  return "unknown";
}

ClusterHint ClusterHint::make(std::vector<HintPair> pairs, const RootSet& roots) {
  const std::size_t r = roots.distinct_count();
  Precision prec = roots.precision;
  Interval base = sqrt(Interval::from_long(3, prec)) / Interval::from_long(static_cast<long>(r), prec);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& h : pairs) {
    std::string name = "hint pair {" + std::to_string(h.a) + ", " + std::to_string(h.b) + "}";
    if (h.a >= r || h.b >= r || h.a == h.b) throw GraphError(name + " does not name two distinct roots");
    std::pair<std::size_t, std::size_t> key = std::minmax(h.a, h.b);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) throw GraphError(name + " is duplicated");
    seen.push_back(key);
    if (!(h.delta > 0) || !std::isfinite(h.delta)) throw GraphError(name + " needs a positive delta");
    Interval threshold = pow(base, Interval::from_long(1, prec) + Interval::from_double(h.delta, prec));
    Interval dist = abs(roots[h.a].box() - roots[h.b].box());
    if (!(dist.hi() <= threshold.lo())) {
      throw GraphError(name + " violates |v_a - v_b| <= (sqrt(3)/r)^(1+delta) for delta = " +
                       std::to_string(h.delta));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const HintPair& x, const HintPair& y) { return x.delta > y.delta; });
  ClusterHint out;
  out.pairs_ = std::move(pairs);
  return out;
}

namespace {

Interval edge_lhs(const RootSet& roots, const RootGraph& g) {
  Interval lhs = Interval::from_long(1, roots.precision);
  for (const auto& e : g.edges()) lhs = lhs * abs(roots[e.head].box() - roots[e.tail].box());
  return lhs;
}

Interval multiplicity_factor(std::size_t d, std::size_t r, Precision prec) {
  long e = std::min(static_cast<long>(d), 2 * static_cast<long>(d) - 2 * static_cast<long>(r));
  mpq_class expo(-e, 6);
  expo.canonicalize();
  return pow(Interval::from_long(3, prec), Interval::from_rational(expo, prec));
}

Interval r_power(std::size_t r, Precision prec) {
  return pow(sqrt(Interval::from_long(static_cast<long>(r), prec)), -static_cast<long>(r));
}

BoundComponents main_components(const Analysis& a, std::size_t edge_count) {
  Precision prec = a.precision();
  const std::size_t r = a.distinct();
  return {sqrt(a.inv.sdisc_abs), pow(a.inv.mahler, -(static_cast<long>(r) - 1)),
          pow(ratio_r_sqrt3(r, prec), -static_cast<long>(edge_count)), r_power(r, prec),
          multiplicity_factor(a.degree(), r, prec)};
}

BoundReport finish(Variant variant, const Analysis& a, Interval lhs, BoundComponents comps, const RootGraph* g) {
  BoundReport rep;
  rep.variant = variant;
  rep.rhs = comps.product();
  rep.lhs = std::move(lhs);
  rep.components = std::move(comps);
  rep.precision = a.precision();
  rep.degree = a.degree();
  rep.distinct = a.distinct();
  rep.margin = Real(rep.precision);
  mpfr_sub(rep.margin.get(), rep.lhs.lo().get(), rep.rhs.hi().get(), MPFR_RNDD);
  if (rep.lhs.certainly_ge(rep.rhs)) {
    rep.verdict = Verdict::holds;
  } else if (rep.rhs.certainly_gt(rep.lhs)) {
    rep.verdict = Verdict::violated;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  if (g != nullptr) {
    rep.edges = g->unordered_edges();
    if (a.distinct() >= 2) rep.certificate = reduce_vandermonde(a.roots, *g);
  }
  if (g != nullptr && g->edge_count() == 0 && rep.verdict == Verdict::inconclusive) {
    // Empty product on the left. Equality with the right-hand side cannot be
    // certified by enclosures, and the theorem for the empty graph is the
    // statement RHS <= 1, so only a certified excess counts against it.
    rep.verdict = Verdict::holds;
    rep.note = "empty edge set: LHS is the empty product and RHS encloses 1";
  }
  if (a.distinct() == 1) {
    // Nothing to bound: no edge can exist on a single root.
    rep.degenerate = true;
    rep.verdict = Verdict::holds;
  }
  return rep;
}

void check_graph(const Analysis& a, const RootGraph& g) {
  if (g.vertex_count() != a.distinct()) {
    throw GraphError("graph has " + std::to_string(g.vertex_count()) + " vertices but P has " +
                     std::to_string(a.distinct()) + " distinct roots");
  }
}

}  // namespace

BoundReport bound_main(const Analysis& a, const RootGraph& g) {
  check_graph(a, g);
  return finish(Variant::main, a, edge_lhs(a.roots, g), main_components(a, g.edge_count()), &g);
}

BoundReport bound_classical(const Analysis& a, const RootGraph& g) {
  check_graph(a, g);
  if (a.distinct() != a.degree()) throw PreconditionError("P is not square-free: Disc(P) vanishes");
  Admissibility adm = check_classical_admissible(g, &a.roots);
  if (!adm.cond1) throw PreconditionError("condition 1 fails: an edge decreases the root modulus");
  if (!adm.cond2) throw PreconditionError("condition 2 fails: the oriented graph has a cycle");
  if (!adm.cond3) {
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      if (g.in_degree(j) > 1) {
        throw PreconditionError("condition 3 fails: vertex " + std::to_string(j) + " has in-degree " +
                                std::to_string(g.in_degree(j)));
      }
    }
  }
  Precision prec = a.precision();
  const std::size_t d = a.degree();
  Interval disc = a.inv.disc_abs ? *a.inv.disc_abs : Interval::from_long(1, prec);
  BoundComponents comps{sqrt(disc), pow(a.inv.mahler, -(static_cast<long>(d) - 1)),
                        pow(ratio_r_sqrt3(d, prec), -static_cast<long>(g.edge_count())), r_power(d, prec),
                        Interval::from_long(1, prec)};
  return finish(Variant::classical, a, edge_lhs(a.roots, g), std::move(comps), &g);
}

BoundReport bound_remark_degree(const Analysis& a, const RootGraph& g) {
  check_graph(a, g);
  if (!a.roots.leading_is_one) throw PreconditionError("remark_degree needs a monic polynomial (a_d = 1)");
  Precision prec = a.precision();
  const long r = static_cast<long>(a.distinct());
  const long dmin = static_cast<long>(min_total_degree(g));
  mpq_class expo(dmin - 2 * (r - 1), 2);
  expo.canonicalize();
  BoundComponents comps = main_components(a, g.edge_count());
  comps.mahler_power = pow(a.inv.mahler, Interval::from_rational(expo, prec));
  return finish(Variant::remark_degree, a, edge_lhs(a.roots, g), std::move(comps), &g);
}

BoundReport bound_remark_pairs(const Analysis& a, const RootGraph& g, const ClusterHint& hints) {
  check_graph(a, g);
  const std::size_t r = a.distinct();
  const std::size_t k = hints.size();
  if (r <= 2) throw PreconditionError("remark_pairs needs r > 2 distinct roots");
  if (g.edge_count() >= k) {
    throw PreconditionError("remark_pairs needs #E < k (#E = " + std::to_string(g.edge_count()) +
                            ", k = " + std::to_string(k) + ")");
  }
  Precision prec = a.precision();
  Interval expo = Interval::from_long(-static_cast<long>(g.edge_count()), prec);
  for (std::size_t i = g.edge_count(); i < k; ++i) expo = expo + Interval::from_double(hints.pairs()[i].delta, prec);
  BoundComponents comps = main_components(a, g.edge_count());
  comps.edge_factor = pow(ratio_r_sqrt3(r, prec), expo);
  return finish(Variant::remark_pairs, a, edge_lhs(a.roots, g), std::move(comps), &g);
}

BoundReport bound_sep_product(const Analysis& a, std::span<const std::size_t> subset) {
  const std::size_t r = a.distinct();
  if (r < 2) throw PreconditionError("sep_product needs r >= 2 distinct roots");
  std::vector<std::size_t> vs(subset.begin(), subset.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw GraphError("subset lists a root twice");
  if (!vs.empty() && vs.back() >= r) throw GraphError("subset index " + std::to_string(vs.back()) + " out of range");

  Precision prec = a.precision();
  Interval lhs = Interval::from_long(1, prec);
  std::map<std::pair<std::size_t, std::size_t>, int> multiset;
  for (std::size_t v : vs) {
    lhs = lhs * sep(a.roots, v);
    std::size_t w = sep_partner(a.roots, v);
    ++multiset[std::minmax(v, w)];
  }
  SepSplit split;
  split.subset = vs;
  for (const auto& [edge, count] : multiset) {
    if (count > 2) throw std::logic_error("nearest-neighbour edge occurs more than twice");
    split.support.push_back(edge);
    if (count == 2) split.doubled.push_back(edge);
  }
  if (split.support.size() + split.doubled.size() != vs.size()) {
    throw std::logic_error("#E0 + #E1 differs from #V'");
  }
  RootGraph g0 = RootGraph::orient(split.support, a.roots);
  RootGraph g1 = RootGraph::orient(split.doubled, a.roots);
  BoundComponents c0 = main_components(a, g0.edge_count());
  BoundComponents c1 = main_components(a, g1.edge_count());
  BoundComponents comps{c0.sdisc_sqrt * c1.sdisc_sqrt, c0.mahler_power * c1.mahler_power,
                        c0.edge_factor * c1.edge_factor, c0.r_power * c1.r_power,
                        c0.multiplicity_factor * c1.multiplicity_factor};
  BoundReport rep = finish(Variant::sep_product, a, std::move(lhs), std::move(comps), &g0);
  rep.split = std::move(split);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

BoundReport run_variant(const VerifyRequest& req, const Analysis& a) {
  if (req.variant == Variant::sep_product) return bound_sep_product(a, req.subset);
  EdgeList edges = std::holds_alternative<EdgeList>(req.graph)
                       ? std::get<EdgeList>(req.graph)
                       : preset_edges(std::get<GraphPreset>(req.graph), a.roots);
  RootGraph g = RootGraph::orient(edges, a.roots);
  switch (req.variant) {
    case Variant::classical: return bound_classical(a, g);
    case Variant::remark_degree: return bound_remark_degree(a, g);
    case Variant::remark_pairs: return bound_remark_pairs(a, g, ClusterHint::make(req.hints, a.roots));
    default: return bound_main(a, g);
  }
}

}  // namespace

VerifyOutcome verify(const VerifyRequest& req) {
  VerifyOutcome out;
  out.initial_precision = req.precision;
  bool first = true;
  std::string note;
  for (Precision p = req.precision; p <= req.ceiling; p *= 2) {
    std::optional<Analysis> a;
    try {
      a = analyze(req.poly, RootOptions{p, 0, req.parallel, std::nullopt});
    } catch (const RootCertificationError& e) {
      note = e.what();
      first = false;
      continue;
    }
    BoundReport rep = run_variant(req, *a);
    if (first) {
      out.initial_verdict = rep.verdict;
      out.initial_report = rep;
    }
    first = false;
    bool done = rep.verdict == Verdict::holds && (!rep.certificate || rep.certificate->conclusive());
    out.report = std::move(rep);
    out.analysis = std::move(a);
    if (done || p * 2 > req.ceiling) return out;
  }
  if (!out.analysis) {
    out.report.variant = req.variant;
    out.report.verdict = Verdict::inconclusive;
    out.report.precision = req.ceiling;
    out.report.note = note;
  }
  return out;
}

}  // namespace dmb
