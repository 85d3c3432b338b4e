// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dmb/bound.hpp"
#include "dmb/divdiff.hpp"
#include "dmb/parse.hpp"
#include "dmb/sweep.hpp"

using namespace dmb;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool rel_close(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::fabs(want); }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Analysis analysis_of(const ExactPoly& p, Precision prec = 128) {
  return analyze(Polynomial(p), RootOptions{prec, 4, true, std::nullopt});
}

ExactPoly poly(const std::string& s) { return parse_polynomial_text(s).exact; }

// 1. Worked examples.
Outcome worked_examples() {
  auto t0 = Clock::now();
  Analysis a = analysis_of(poly("x^2 - 1"));
  BoundReport r = bound_main(a, RootGraph::orient(EdgeList{{0, 1}}, a.roots));
  Analysis b = analysis_of(poly("(x-1)^2*x"));
  BoundReport s = bound_main(b, RootGraph::orient(EdgeList{{0, 1}}, b.roots));
  double closed = std::sqrt(2.0) * (std::sqrt(3.0) / 2) * 0.5 * std::pow(3.0, -1.0 / 3.0);
  double t = seconds_since(t0);
  bool ok = rel_close(r.lhs.mid_d(), 2.0, 1e-12) && rel_close(r.rhs.mid_d(), std::sqrt(3.0) / 2, 1e-12) &&
            rel_close(s.rhs.mid_d(), closed, 1e-9) && r.verdict == Verdict::holds && s.verdict == Verdict::holds &&
            t < 1.0;
  return {ok, "X^2-1: lhs=" + fmt("%.15g", r.lhs.mid_d()) + " rhs=" + fmt("%.15g", r.rhs.mid_d()) +
                  "; (X-1)^2 X: rhs=" + fmt("%.12g", s.rhs.mid_d()) + " closed form " + fmt("%.12g", closed) +
                  "; " + fmt("%.3fs", t)};
}

// 2 and 3 share one sweep.
SweepSummary g_sweep;
double g_sweep_seconds = 0;

Outcome soundness_sweep() {
  auto t0 = Clock::now();
  SweepParams params;
  params.count = 1000;
  params.seed = 42;
  params.max_degree = 12;
  params.max_multiplicity = 4;
  params.ceiling = 512;
  g_sweep = run_sweep(params);
  g_sweep_seconds = seconds_since(t0);
  const SweepSummary& s = g_sweep;
  bool ok = s.violations == 0 && s.errors == 0 && s.unresolved == 0 && s.inconclusive_initial * 100 <= s.params.count &&
            g_sweep_seconds < 300;
  return {ok, std::to_string(s.params.count) + " instances: violations=" + std::to_string(s.violations) +
                  " errors=" + std::to_string(s.errors) + " inconclusive@128=" +
                  std::to_string(s.inconclusive_initial) + " resolved<=512=" +
                  std::to_string(s.resolved_after_escalation) + " unresolved=" + std::to_string(s.unresolved) + "; " +
                  fmt("%.1fs", g_sweep_seconds)};
}

Outcome certificate_identity() {
  const SweepSummary& s = g_sweep;
  std::size_t with_cert = 0, missing = 0;
  for (const auto& r : s.instances) {
    if (r.base_certificate) {
      ++with_cert;
    } else if (r.distinct >= 2) {
      ++missing;
    }
  }
  bool ok = !s.instances.empty() && missing == 0 && s.identity_failures == 0 && s.hadamard_failures == 0 &&
            s.max_relative_discrepancy <= 1e-10;
  return {ok, std::to_string(with_cert) + " certificates at 128 bits (" + std::to_string(missing) +
                  " missing): identity failures=" + std::to_string(s.identity_failures) +
                  " hadamard failures=" + std::to_string(s.hadamard_failures) +
                  " max relative discrepancy=" + fmt("%.3g", s.max_relative_discrepancy)};
}

// 4. Forced multiple roots, d <= 10, 256-bit roots.
Outcome sdisc_two_routes() {
  SweepParams params;
  params.max_degree = 9;  // one factor may be squared below
  params.max_multiplicity = 4;
  std::size_t agree = 0, forced = 0, total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    Instance inst = generate_instance(instance_seed(4004, i), params);
    // Square one random factor so every instance has a repeated root.
    auto& [q, m] = inst.roots[i % inst.roots.size()];
    if (m == 1) {
      m = 2;
      inst.poly = inst.poly * (poly("x") - ExactPoly::constant(q));
    }
    bool multiple = false;
    for (const auto& e : inst.roots) multiple = multiple || e.second > 1;
    forced += multiple ? 1 : 0;
    RootSet rs = find_roots(inst.poly, RootOptions{256, 4, true, std::nullopt});
    Interval by_roots = sdisc_abs_from_roots(rs);
    Subdiscriminant exact = sdisc_from_subresultants(inst.poly);
    if (by_roots.overlaps(exact.abs_enclosure(256)) && exact.index == inst.poly.degree() - rs.distinct_count()) {
      ++agree;
    }
  }
  return {agree == total && forced == total,
          std::to_string(agree) + "/" + std::to_string(total) + " agree within radii; " + std::to_string(forced) +
              " with a repeated root"};
}

// 5. Divided differences.
Outcome divdiff_routes() {
  std::mt19937_64 rng(5005);
  auto unif = [&](double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = 0;
  std::size_t count = 500;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t n = 1 + rng() % 8;
    long p = static_cast<long>(rng() % 11);
    std::vector<CInterval> pts;
    while (pts.size() < n) {
      CInterval z = CInterval::point(Complex(unif(-2, 2), unif(-2, 2), 128));
      bool close = false;
      for (const auto& w : pts) close = close || abs(w - z).mid_d() < 0.05;
      if (!close) pts.push_back(z);
    }
    NodeList nodes(pts);
    std::vector<CInterval> vals;
    for (const auto& v : pts) vals.push_back(pow(v, p));
    CInterval a = divdiff_recursive(vals, nodes), b = divdiff_explicit(vals, nodes), c = divdiff_monomial(p, nodes);
    double scale = std::max(abs(c).mid_d(), 1e-300);
    double err = std::max(abs(a - c).mid_d(), abs(b - c).mid_d());
    if (abs(c).mid_d() == 0) {
      worst = std::max(worst, err);  // exact zero: compare absolutely
    } else {
      worst = std::max(worst, err / scale);
    }
  }
  return {worst <= 1e-12, std::to_string(count) + " node sets, worst disagreement " + fmt("%.3g", worst)};
}

// 6. Exhaustive lemmas.
Outcome lemmas() {
  auto t0 = Clock::now();
  std::size_t aux = 0, aux_fail = 0;
  for (long r = 1; r <= 100; ++r) {
    for (long d = 0; d < r; ++d) {
      ++aux;
      if (!lemma_aux_check(d, r).holds()) ++aux_fail;
    }
  }
  std::size_t comps = 0, comp_fail = 0;
  for (int d = 1; d <= 15; ++d) {
    // Bit k of mask set means a cut after position k+1.
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
      std::vector<int> parts;
      int run = 1;
      for (int k = 0; k < d - 1; ++k) {
        if (mask & (1u << k)) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      ++comps;
      if (!multiplicity_product_bound(parts).holds) ++comp_fail;
    }
  }
  double t = seconds_since(t0);
  return {aux_fail == 0 && comp_fail == 0 && t < 30,
          "aux chain " + std::to_string(aux - aux_fail) + "/" + std::to_string(aux) + "; multiplicity " +
              std::to_string(comps - comp_fail) + "/" + std::to_string(comps) + " compositions; " + fmt("%.2fs", t)};
}

// 7. Square-free P with admissible graphs.
Outcome specialization() {
  SweepParams params;
  params.max_multiplicity = 1;
  params.min_distinct = 2;
  params.max_degree = 10;
  std::mt19937_64 rng(7007);
  double worst = 0;
  std::size_t ok = 0, total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    Instance inst = generate_instance(instance_seed(7007, i), params);
    Analysis a = analysis_of(inst.poly);
    const std::size_t r = a.distinct();
    EdgeList edges;
    switch (i % 3) {
      case 0: edges = preset_edges(GraphPreset::path, r); break;
      case 1:
        for (std::size_t j = 1; j < r; ++j) edges.emplace_back(0, j);  // star into the lowest vertex
        break;
      default:
        for (std::size_t j = 1; j < r; ++j) {
          if (rng() % 3 != 0) edges.emplace_back(rng() % j, j);  // random forest, in-degree <= 1
        }
    }
    RootGraph g = RootGraph::orient(edges, a.roots);
    if (!check_classical_admissible(g, &a.roots).all()) continue;
    double m = bound_main(a, g).rhs.mid_d(), c = bound_classical(a, g).rhs.mid_d();
    double err = std::fabs(m - c) / c;
    worst = std::max(worst, err);
    if (err <= 1e-12) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " equal, worst relative gap " +
                           fmt("%.3g", worst)};
}

// 8. Remarks never weaken the main bound.
Outcome monotonicity() {
  SweepParams params;
  params.monic = true;
  params.max_degree = 10;
  params.presets = {"path", "star_max", "complete", "nearest_neighbor", "random"};
  std::size_t deg_ok = 0, total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    Instance inst = generate_instance(instance_seed(8008, i), params);
    Analysis a = analysis_of(inst.poly);
    EdgeList edges = std::holds_alternative<EdgeList>(inst.graph)
                         ? std::get<EdgeList>(inst.graph)
                         : preset_edges(std::get<GraphPreset>(inst.graph), a.roots);
    RootGraph g = RootGraph::orient(edges, a.roots);
    double d = bound_remark_degree(a, g).rhs.mid_d(), m = bound_main(a, g).rhs.mid_d();
    if (d >= m * (1 - 1e-12)) ++deg_ok;
  }

  // Roots -e, e, 1, 1+e, -2: two close pairs.
  std::size_t pair_ok = 0, pair_total = 0;
  for (const char* eps : {"1/100", "1/10000", "1/1000000"}) {
    std::string e(eps);
    ExactPoly p = poly("(x - " + e + ")(x + " + e + ")(x - 1)(x - 1 - " + e + ")(x + 2)");
    Analysis a = analysis_of(p);
    const double base = std::sqrt(3.0) / static_cast<double>(a.distinct());
    auto delta_for = [&](std::size_t i, std::size_t j) {
      double dist = abs(a.roots[i].box() - a.roots[j].box()).mid_d();
      return 0.99 * (std::log(dist) / std::log(base) - 1);  // safety factor below the exact exponent
    };
    ClusterHint hints = ClusterHint::make({{0, 1, delta_for(0, 1)}, {2, 3, delta_for(2, 3)}}, a.roots);
    for (const EdgeList& edges : {EdgeList{}, EdgeList{{0, 1}}, EdgeList{{2, 3}}, EdgeList{{1, 4}}}) {
      RootGraph g = RootGraph::orient(edges, a.roots);
      BoundReport pr = bound_remark_pairs(a, g, hints);
      BoundReport mr = bound_main(a, g);
      ++pair_total;
      if (pr.rhs.mid_d() >= mr.rhs.mid_d() * (1 - 1e-12) && pr.verdict == Verdict::holds) ++pair_ok;
    }
  }
  return {deg_ok == total && pair_ok == pair_total,
          "remark_degree >= main on " + std::to_string(deg_ok) + "/" + std::to_string(total) +
              " monic instances; remark_pairs >= main and holds on " + std::to_string(pair_ok) + "/" +
              std::to_string(pair_total) + " clustered cases"};
}

// 9. Products of sep.
Outcome sep_products() {
  SweepParams params;
  params.variant = Variant::sep_product;
  params.max_degree = 10;
  std::size_t ok = 0, total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    Instance inst = generate_instance(instance_seed(9009, i), params);
    VerifyRequest req;
    req.poly = inst.poly;
    req.variant = Variant::sep_product;
    req.subset = inst.subset;
    req.ceiling = 512;
    VerifyOutcome out = verify(req);
    const auto& split = out.report.split;
    if (out.report.verdict == Verdict::holds && split &&
        split->support.size() + split->doubled.size() == inst.subset.size()) {
      ++ok;
    }
  }
  Analysis a = analysis_of(poly("x^2 - 1"));
  std::vector<std::size_t> both = {0, 1};
  BoundReport fx = bound_sep_product(a, both);
  bool fixture = rel_close(fx.lhs.mid_d(), 4.0, 1e-12) && rel_close(fx.rhs.mid_d(), 0.75, 1e-12);
  return {ok == total && fixture, std::to_string(ok) + "/" + std::to_string(total) +
                                      " instances hold with #E0+#E1=#V'; X^2-1 fixture lhs=" +
                                      fmt("%.12g", fx.lhs.mid_d()) + " rhs=" + fmt("%.12g", fx.rhs.mid_d())};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, worked_examples}, {2, soundness_sweep}, {3, certificate_identity},
      {4, sdisc_two_routes}, {5, divdiff_routes}, {6, lemmas},
      {7, specialization},  {8, monotonicity},   {9, sep_products},
  };
  int failures = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
