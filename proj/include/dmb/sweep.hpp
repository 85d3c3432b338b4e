#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmb/bound.hpp"
#include "dmb/report.hpp"

namespace dmb {

struct SweepParams {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::size_t max_degree = 12;
  int max_multiplicity = 4;
  std::size_t min_distinct = 1;
  /// Graph presets to draw from: path, star_max, complete, nearest_neighbor, random.
  std::vector<std::string> presets = {"path", "star_max", "complete", "nearest_neighbor", "random"};
  bool monic = false;
  /// Places the second root at distance exactly epsilon from the first.
  std::optional<mpq_class> force_cluster;
  Variant variant = Variant::main;
  Precision precision = 128;
  Precision ceiling = 512;
};

/// Throws std::invalid_argument unless prec is a power of two in [64, 1024].
void validate_precision(Precision prec);

struct Instance {
  ExactPoly poly;
  /// Exact roots with multiplicities, in canonical order.
  std::vector<std::pair<GaussQ, int>> roots;
  GraphInput graph;
  std::string graph_name;
  std::vector<std::size_t> subset;  // used by sep_product
};

/// Seed for instance `index` of a sweep with master seed `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

/// Deterministic: the same (seed, params) always yields the same instance.
/// P = a_d prod (X - q_i)^{m_i} with random Gaussian-rational q_i.
Instance generate_instance(std::uint64_t seed, const SweepParams& params);

struct InstanceResult {
  std::size_t index = 0;
  std::string polynomial;
  std::string graph;
  std::size_t degree = 0;
  std::size_t distinct = 0;
  std::size_t edges = 0;
  Verdict initial_verdict = Verdict::inconclusive;
  Verdict final_verdict = Verdict::inconclusive;
  Precision final_precision = 0;
  double margin = 0.0;
  bool base_certificate = false;  // certificate computed at the base precision
  double relative_discrepancy = 0.0;
  bool identity_certified = true;
  bool hadamard_certified = true;
  std::string error;
};

struct SweepSummary {
  SweepParams params;
  std::vector<InstanceResult> instances;
  std::size_t holds_initial = 0;
  std::size_t inconclusive_initial = 0;
  std::size_t resolved_after_escalation = 0;
  std::size_t unresolved = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::size_t identity_failures = 0;
  std::size_t hadamard_failures = 0;
  double max_relative_discrepancy = 0.0;
};

InstanceResult run_instance(std::size_t index, const SweepParams& params);

/// Serial reference sweep.
SweepSummary run_sweep_serial(const SweepParams& params);
/// Instances distributed over OpenMP threads; same summary as the serial sweep.
SweepSummary run_sweep(const SweepParams& params);

/// Summary JSON; per-instance records are included when `detailed`.
json to_json(const SweepSummary& s, bool detailed = false);

}  // namespace dmb
