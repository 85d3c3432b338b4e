#include "dmb/sweep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dmb {

void validate_precision(Precision prec) {
  if (prec < 64 || prec > 1024 || (prec & (prec - 1)) != 0) {
    throw std::invalid_argument("precision must be a power of two between 64 and 1024, got " +
                                std::to_string(prec));
  }
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

// Uniform in [lo, hi]. Modulo reduction keeps results identical across
// standard library implementations.
long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GaussQ random_root(Rng& rng) {
  mpq_class re(uniform(rng, -8, 8), uniform(rng, 1, 4));
  re.canonicalize();
  mpq_class im = 0;
  if (uniform(rng, 0, 2) != 0) {
    im = mpq_class(uniform(rng, -8, 8), uniform(rng, 1, 4));
    im.canonicalize();
  }
  return {re, im};
}

bool exact_canonical_less(const GaussQ& a, const GaussQ& b) {
  mpq_class na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

GraphInput pick_graph(Rng& rng, const SweepParams& params, std::size_t r, std::string& name) {
  name = params.presets[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(params.presets.size()) - 1))];
  if (name == "random") {
    EdgeList edges;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (rng() % 2 == 0) edges.emplace_back(i, j);
      }
    }
    return edges;
  }
  auto preset = parse_preset(name);
  if (!preset) throw std::invalid_argument("unknown graph preset '" + name + "'");
  if (r < 2) return EdgeList{};
  return *preset;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, const SweepParams& params) {
  if (params.max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  if (params.max_multiplicity < 1) throw std::invalid_argument("max_multiplicity must be at least 1");
  if (params.presets.empty()) throw std::invalid_argument("no graph presets to draw from");
  std::size_t min_r = std::max<std::size_t>(params.min_distinct, 1);
  if (params.force_cluster || params.variant == Variant::sep_product) min_r = std::max<std::size_t>(min_r, 2);
  if (min_r > params.max_degree) throw std::invalid_argument("min_distinct exceeds max_degree");

  Rng rng(seed);
  const std::size_t r = static_cast<std::size_t>(
      uniform(rng, static_cast<long>(min_r), static_cast<long>(params.max_degree)));

  std::vector<GaussQ> values;
  if (params.force_cluster) {
    GaussQ base = random_root(rng);
    values.push_back(base);
    values.push_back(base + GaussQ(*params.force_cluster));
  }
  while (values.size() < r) {
    GaussQ q = random_root(rng);
    if (std::find(values.begin(), values.end(), q) == values.end()) values.push_back(q);
  }

  std::vector<int> mult(r, 1);
  std::size_t budget = params.max_degree - r;
  for (std::size_t i = 0; i < r && budget > 0; ++i) {
    if (uniform(rng, 0, 2) != 0) continue;
    long extra = uniform(rng, 1, std::min<long>(params.max_multiplicity - 1, static_cast<long>(budget)));
    if (params.max_multiplicity == 1) extra = 0;
    mult[i] += static_cast<int>(extra);
    budget -= static_cast<std::size_t>(extra);
  }

  Instance inst;
  for (std::size_t i = 0; i < r; ++i) inst.roots.emplace_back(values[i], mult[i]);
  std::sort(inst.roots.begin(), inst.roots.end(),
            [](const auto& x, const auto& y) { return exact_canonical_less(x.first, y.first); });

  GaussQ lead = 1;
  if (!params.monic) {
    long num = 0;
    while (num == 0) num = uniform(rng, -5, 5);
    mpq_class lre(num, uniform(rng, 1, 3));
    lre.canonicalize();
    lead = GaussQ(lre, uniform(rng, 0, 3) == 0 ? mpq_class(uniform(rng, -2, 2)) : mpq_class(0));
  }
  inst.poly = ExactPoly::from_roots(lead, inst.roots);
  inst.graph = pick_graph(rng, params, r, inst.graph_name);

  if (params.variant == Variant::sep_product) {
    for (std::size_t i = 0; i < r; ++i) {
      if (rng() % 2 == 0) inst.subset.push_back(i);
    }
    if (inst.subset.empty()) inst.subset.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(r) - 1)));
  }
  return inst;
}

InstanceResult run_instance(std::size_t index, const SweepParams& params) {
  InstanceResult res;
  res.index = index;
  try {
    Instance inst = generate_instance(instance_seed(params.seed, index), params);
    res.polynomial = inst.poly.to_string();
    res.graph = inst.graph_name;
    res.degree = inst.poly.degree();
    res.distinct = inst.roots.size();

    VerifyRequest req;
    req.poly = inst.poly;
    req.variant = params.variant;
    req.graph = inst.graph;
    req.subset = inst.subset;
    req.precision = params.precision;
    req.ceiling = params.ceiling;
    req.parallel = false;  // instances are the unit of parallelism here
    VerifyOutcome out = verify(req);

    res.initial_verdict = out.initial_report ? out.initial_report->verdict : Verdict::inconclusive;
    res.final_verdict = out.report.verdict;
    res.final_precision = out.report.precision;
    res.margin = out.report.margin.to_double(MPFR_RNDD);
    res.edges = out.report.edges.size();
    if (out.initial_report && out.initial_report->certificate) {
      const auto& c = *out.initial_report->certificate;
      res.base_certificate = true;
      res.relative_discrepancy = c.relative_discrepancy;
      res.identity_certified = c.identity_certified;
      res.hadamard_certified = c.hadamard_certified;
    }
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  return res;
}

namespace {

SweepSummary summarize(const SweepParams& params, std::vector<InstanceResult> results) {
  SweepSummary s;
  s.params = params;
  for (const auto& r : results) {
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    if (r.initial_verdict == Verdict::holds) {
      ++s.holds_initial;
    } else {
      ++s.inconclusive_initial;
      if (r.final_verdict == Verdict::holds) ++s.resolved_after_escalation;
    }
    if (r.final_verdict == Verdict::violated) ++s.violations;
    if (r.final_verdict == Verdict::inconclusive) ++s.unresolved;
    if (r.base_certificate) {
      if (!r.identity_certified) ++s.identity_failures;
      if (!r.hadamard_certified) ++s.hadamard_failures;
      s.max_relative_discrepancy = std::max(s.max_relative_discrepancy, r.relative_discrepancy);
    }
  }
  s.instances = std::move(results);
  return s;
}

}  // namespace

SweepSummary run_sweep_serial(const SweepParams& params) {
  std::vector<InstanceResult> results;
  results.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) results.push_back(run_instance(i, params));
  return summarize(params, std::move(results));
}

SweepSummary run_sweep(const SweepParams& params) {
  std::vector<InstanceResult> results(params.count);
  const long n = static_cast<long>(params.count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = run_instance(static_cast<std::size_t>(i), params);
  return summarize(params, std::move(results));
}

json to_json(const SweepSummary& s, bool detailed) {
  json out = {
      {"seed", s.params.seed},
      {"count", s.params.count},
      {"variant", to_string(s.params.variant)},
      {"precision_bits", s.params.precision},
      {"ceiling_bits", s.params.ceiling},
      {"holds_initial", s.holds_initial},
      {"inconclusive_initial", s.inconclusive_initial},
      {"resolved_after_escalation", s.resolved_after_escalation},
      {"unresolved", s.unresolved},
      {"violations", s.violations},
      {"errors", s.errors},
      {"identity_failures", s.identity_failures},
      {"hadamard_failures", s.hadamard_failures},
      {"max_relative_discrepancy", s.max_relative_discrepancy},
  };
  json failing = json::array();
  json all = json::array();
  for (const auto& r : s.instances) {
    json rec = {{"index", r.index},
                {"polynomial", r.polynomial},
                {"graph", r.graph},
                {"degree", r.degree},
                {"distinct_roots", r.distinct},
                {"edges", r.edges},
                {"initial_verdict", to_string(r.initial_verdict)},
                {"final_verdict", to_string(r.final_verdict)},
                {"final_precision", r.final_precision},
                {"margin", r.margin},
                {"relative_discrepancy", r.relative_discrepancy}};
    if (!r.error.empty()) rec["error"] = r.error;
    bool bad = !r.error.empty() || r.final_verdict != Verdict::holds || !r.identity_certified || !r.hadamard_certified;
    if (bad) failing.push_back(rec);
    if (detailed) all.push_back(std::move(rec));
  }
  out["failures"] = failing;
  if (detailed) out["instances"] = all;
  return out;
}

}  // namespace dmb
