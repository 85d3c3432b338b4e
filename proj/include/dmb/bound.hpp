#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dmb/graph.hpp"
#include "dmb/interval.hpp"
#include "dmb/invariants.hpp"
#include "dmb/poly.hpp"
#include "dmb/roots.hpp"

namespace dmb {

/// A bound was requested outside the hypotheses of its theorem.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial together with its certified roots and invariants.
struct Analysis {
  Polynomial poly;
  RootSet roots;
  InvariantBundle inv;

  Precision precision() const { return roots.precision; }
  std::size_t degree() const { return inv.degree; }
  std::size_t distinct() const { return inv.distinct; }
};

Analysis analyze(const Polynomial& p, const RootOptions& opts = {});

// ---------------------------------------------------------------------------
// Auxiliary inequalities, checked exactly on squared quantities.

struct AuxLemmaCheck {
  double lhs;  // (sum_{i=d}^{r-1} C(i,d)^2)^{1/2}
  double mid;  // C(r-1,d) ((r+d)/(2d+1))^{1/2}
  double rhs;  // (r/sqrt 3)^d r^{1/2}
  bool lhs_le_mid;
  bool mid_le_rhs;
  bool holds() const { return lhs_le_mid && mid_le_rhs; }
};

/// Requires 0 <= d <= r-1; throws std::invalid_argument otherwise.
AuxLemmaCheck lemma_aux_check(long d, long r);

struct MultiplicityCheck {
  mpz_class product;  // prod m_i
  double bound;       // 3^{min(d, 2d-2r)/3}
  bool holds;         // decided exactly via product^3 <= 3^{min(d,2d-2r)}
};

MultiplicityCheck multiplicity_product_bound(std::span<const int> multiplicities);

// ---------------------------------------------------------------------------
// Vandermonde reduction.

using CMatrix = std::vector<std::vector<CInterval>>;

/// Row j is F(v_j) = (1, v_j, ..., v_j^{r-1}).
CMatrix vandermonde_matrix(const RootSet& roots);

/// Interval Gaussian elimination with partial pivoting on midpoint modulus.
/// Throws std::domain_error when no pivot is certainly nonzero.
CInterval interval_determinant(CMatrix m);

struct RowNormCheck {
  Interval norm;   // Euclidean norm of the row
  Interval bound;  // (r/sqrt 3)^{d_j} r^{1/2} max(1,|v_j|)^{r-1-d_j}
  bool holds() const { return norm.lo() <= bound.hi(); }
};

RowNormCheck row_norm_bound(const RootSet& roots, std::span<const CInterval> row, std::size_t j,
                            std::size_t in_degree);

/// (r/sqrt 3)^{#E} r^{r/2} prod_j max(1,|v_j|)^{r-1-d_j}.
Interval hadamard_bound(const RootSet& roots, const RootGraph& g);

struct VandermondeCertificate {
  /// W_r, W_{r-1}, ..., W_1; matrices[0] is the Vandermonde matrix.
  std::vector<CMatrix> matrices;
  /// For j = r..2: prod (v_j - v_alpha) over the edges finishing at v_j.
  std::vector<CInterval> step_factors;
  CInterval det_w;
  CInterval det_w1;
  /// prod over all oriented edges of (v_beta - v_alpha).
  CInterval edge_product;
  std::vector<RowNormCheck> rows;  // rows of W_1
  Interval hadamard_rhs;
  /// det_w - det_w1 * edge_product encloses zero.
  bool identity_certified = false;
  double relative_discrepancy = 0.0;
  /// Every row norm and |det W_1| within its bound up to enclosure radii.
  bool hadamard_certified = false;

  bool conclusive() const { return identity_certified && hadamard_certified; }
};

/// Replaces row j (j = r..2) by the divided difference of F over the tails
/// of the edges finishing at v_j followed by v_j itself.
VandermondeCertificate reduce_vandermonde(const RootSet& roots, const RootGraph& g);

// ---------------------------------------------------------------------------
// Bounds.

enum class Variant { classical, main, remark_degree, remark_pairs, sep_product };
enum class Verdict { holds, inconclusive, violated };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& name);
std::string to_string(Verdict v);

struct BoundComponents {
  Interval sdisc_sqrt;
  Interval mahler_power;
  Interval edge_factor;
  Interval r_power;
  Interval multiplicity_factor;

  Interval product() const { return sdisc_sqrt * mahler_power * edge_factor * r_power * multiplicity_factor; }
};

struct SepSplit {
  EdgeList support;  // E_0
  EdgeList doubled;  // E_1
  std::vector<std::size_t> subset;
};

struct BoundReport {
  Variant variant = Variant::main;
  Interval lhs;
  Interval rhs;
  BoundComponents components;
  Real margin;  // lhs.lo - rhs.hi, rounded down
  Verdict verdict = Verdict::inconclusive;
  Precision precision = 0;
  std::size_t degree = 0;
  std::size_t distinct = 0;
  EdgeList edges;
  bool degenerate = false;  // r = 1
  std::optional<VandermondeCertificate> certificate;
  std::optional<SepSplit> split;
  std::string note;
};

/// Pair of roots known to be close, with a user-supplied exponent.
struct HintPair {
  std::size_t a;
  std::size_t b;
  double delta;
};

/// Validated hints, sorted by decreasing delta.
class ClusterHint {
 public:
  /// Checks indices, distinctness as unordered pairs, delta > 0, and
  /// |v_a - v_b| <= (sqrt 3 / r)^{1 + delta}. Throws GraphError.
  static ClusterHint make(std::vector<HintPair> pairs, const RootSet& roots);
  const std::vector<HintPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<HintPair> pairs_;
};

BoundReport bound_main(const Analysis& a, const RootGraph& g);
BoundReport bound_classical(const Analysis& a, const RootGraph& g);
BoundReport bound_remark_degree(const Analysis& a, const RootGraph& g);
BoundReport bound_remark_pairs(const Analysis& a, const RootGraph& g, const ClusterHint& hints);
BoundReport bound_sep_product(const Analysis& a, std::span<const std::size_t> subset);

/// Graph given either as explicit edges or as a preset name resolved
/// against the canonical root order.
using GraphInput = std::variant<EdgeList, GraphPreset>;

struct VerifyRequest {
  Polynomial poly;
  Variant variant = Variant::main;
  GraphInput graph = EdgeList{};
  std::vector<std::size_t> subset;  // sep_product
  std::vector<HintPair> hints;      // remark_pairs
  Precision precision = 128;
  Precision ceiling = 1024;
  bool parallel = true;
};

struct VerifyOutcome {
  BoundReport report;
  std::optional<Analysis> analysis;  // at the final precision
  Verdict initial_verdict = Verdict::inconclusive;
  Precision initial_precision = 0;
  /// Report at the starting precision, absent if roots failed to certify there.
  std::optional<BoundReport> initial_report;
};

/// Runs the selected bound, doubling the precision while the verdict (or
/// the attached certificate) is inconclusive, up to the ceiling. Input and
/// precondition errors propagate; certification failure at the ceiling
/// yields an inconclusive report.
VerifyOutcome verify(const VerifyRequest& req);

}  // namespace dmb
