#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "dmb/bound.hpp"
#include "dmb/parse.hpp"

namespace dmb::test {

inline ExactPoly poly(const std::string& text) { return parse_polynomial_text(text).exact; }

inline RootSet roots_of(const std::string& text, Precision prec = 128) {
  return find_roots(poly(text), RootOptions{prec, 4, false, std::nullopt});
}

inline Analysis analysis_of(const std::string& text, Precision prec = 128) {
  return analyze(Polynomial(poly(text)), RootOptions{prec, 4, false, std::nullopt});
}

inline bool rel_close(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
}

inline CInterval cpoint(double re, double im = 0.0, Precision prec = 128) {
  return CInterval::point(Complex(re, im, prec));
}

/// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() % 2 == 0; }
  double real(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  mpq_class rational(long num_bound, long den_bound) {
    mpq_class q(range(-num_bound, num_bound), range(1, den_bound));
    q.canonicalize();
    return q;
  }
  GaussQ gauss(long num_bound, long den_bound, bool real_only = false) {
    return {rational(num_bound, den_bound), real_only ? mpq_class(0) : rational(num_bound, den_bound)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dmb::test
