#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmb/interval.hpp"
#include "dmb/poly.hpp"

namespace dmb {

/// Raised when root disks cannot be separated at the highest precision tried.
class RootCertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One distinct root: midpoint, certified radius and multiplicity.
struct RootEntry {
  Complex value;
  Real radius;
  int multiplicity = 1;

  /// Box enclosing the certified disk.
  CInterval box() const { return CInterval::disk(value, radius); }
};

/// Distinct roots of a polynomial in canonical order:
/// nondecreasing by (modulus, real part, imaginary part) of the midpoints.
struct RootSet {
  std::vector<RootEntry> entries;
  CInterval leading;             // enclosure of a_d
  bool leading_is_one = false;   // a_d == 1 exactly
  std::size_t total_degree = 0;  // d
  Precision precision = 128;     // precision the roots were certified at
  bool exact_multiplicities = false;

  std::size_t distinct_count() const { return entries.size(); }
  const RootEntry& operator[](std::size_t j) const { return entries[j]; }
};

struct RootOptions {
  Precision precision = 128;
  /// Number of precision doublings attempted after the first failure.
  int max_doublings = 4;
  /// Run the Aberth kernel with OpenMP.
  bool parallel = true;
  /// Cluster tolerance for numeric input; default 2^(-p/4) * (1 + max |a_k|).
  std::optional<double> cluster_tolerance;
};

/// Strict weak order used for canonical root numbering.
bool canonical_less(const Complex& a, const Complex& b);
void canonical_sort(std::vector<RootEntry>& entries);

RootSet find_roots(const ExactPoly& p, const RootOptions& opts = {});
RootSet find_roots(const NumericPoly& p, const RootOptions& opts = {});
RootSet find_roots(const Polynomial& p, const RootOptions& opts = {});

/// min_{i != j} |v_i - v_j| as an enclosure. Throws std::invalid_argument if r = 1.
Interval sep(const RootSet& roots, std::size_t j);
/// Index realizing sep(roots, j); when several roots may be closest the
/// smallest canonical index wins.
std::size_t sep_partner(const RootSet& roots, std::size_t j);

namespace kernels {

/// Starting points on a circle enclosing all roots of a monic-normalized polynomial.
std::vector<Complex> aberth_initial(const std::vector<Complex>& coeffs, Precision prec);

/// One Jacobi-style Aberth sweep: every correction is computed from the
/// current iterate, then all roots are updated. Returns the largest
/// correction relative to max(1, |z|). The serial and OpenMP versions
/// produce bit-identical iterates.
double aberth_step_serial(const std::vector<Complex>& coeffs, std::vector<Complex>& z);
double aberth_step_omp(const std::vector<Complex>& coeffs, std::vector<Complex>& z);

/// Iterates aberth steps until corrections fall below 2^(-prec+8) or
/// max_iter is reached, then performs two polishing steps.
std::vector<Complex> aberth_solve(const std::vector<Complex>& coeffs, std::vector<Complex> z, Precision prec,
                                  bool parallel, int max_iter = 400);

}  // namespace kernels

}  // namespace dmb
