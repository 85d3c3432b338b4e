#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmb/gaussian.hpp"
#include "dmb/interval.hpp"
#include "dmb/poly.hpp"
#include "dmb/roots.hpp"

namespace dmb {

/// The algebraic quantities every bound consumes.
struct InvariantBundle {
  Interval mahler;
  /// |Disc(P)|; absent for d < 2.
  std::optional<Interval> disc_abs;
  /// |sDisc_{d-r}(P)|.
  Interval sdisc_abs;
  std::size_t sdisc_index = 0;  // d - r
  std::size_t degree = 0;       // d
  std::size_t distinct = 0;     // r
  /// Exact values, present for exact input.
  std::optional<GaussQ> sdisc_exact;
  std::optional<GaussQ> disc_exact;
};

/// |a_d| * prod max(1, |v_j|)^{m_j}.
Interval mahler_measure(const RootSet& roots);

class JensenUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct JensenEstimate {
  double value;  // estimate at the finest level used
  double gap;    // difference from the previous level
};

/// exp of the trapezoidal mean of log|P| over the unit circle, starting at
/// N points and doubling until consecutive levels agree (at most 2^20).
/// Throws JensenUnavailable if a root lies within 1e-6 of the circle.
JensenEstimate mahler_measure_jensen(const Polynomial& p, const RootSet& roots, std::size_t nodes);

/// (|a_d|^{r-1} (prod m_j)^{1/2} prod_{i<j} |v_i - v_j|)^2.
Interval sdisc_abs_from_roots(const RootSet& roots);

/// Principal subresultant coefficients sRes_0 .. sRes_{deg q} of (p, q),
/// each the determinant of the leading square block of the j-th Sylvester
/// submatrix. Requires deg p > deg q >= 0.
std::vector<GaussQ> principal_subresultants(const ExactPoly& p, const ExactPoly& q);

struct Subdiscriminant {
  std::size_t index;  // d - r
  GaussQ value;       // +-sRes_{d-r}(P, P') / a_d, sign chosen so index 0 gives Disc
  /// |value|^2, exact.
  mpq_class norm() const { return value.norm(); }
  Interval abs_enclosure(Precision prec) const { return value.abs_enclosure(prec); }
};

/// First nonvanishing subdiscriminant of P, scaled so that its modulus
/// agrees with sdisc_abs_from_roots. Requires degree >= 1.
Subdiscriminant sdisc_from_subresultants(const ExactPoly& p);

/// (-1)^{d(d-1)/2} Res(P, P') / a_d. Throws std::invalid_argument for d < 2.
GaussQ discriminant(const ExactPoly& p);

/// Determinant over Q(i) by Gaussian elimination.
GaussQ determinant(std::vector<std::vector<GaussQ>> m);

/// Assembles the bundle. For exact input d - r comes from the subresultant
/// sequence and is cross-checked against the root set; a mismatch throws
/// std::logic_error.
InvariantBundle compute_invariants(const Polynomial& p, const RootSet& roots);

}  // namespace dmb
