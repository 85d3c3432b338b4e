#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace dmb;
using dmb::test::roots_of;

namespace {

void expect_root(const RootSet& rs, std::size_t j, double re, double im, int mult) {
  EXPECT_NEAR(rs[j].value.re.to_double(), re, 1e-30) << "root " << j;
  EXPECT_NEAR(rs[j].value.im.to_double(), im, 1e-30) << "root " << j;
  EXPECT_EQ(rs[j].multiplicity, mult) << "root " << j;
}

}  // namespace

TEST(Roots, CanonicalOrderExamples) {
  RootSet a = roots_of("x^2 - 1");
  ASSERT_EQ(a.distinct_count(), 2u);
  expect_root(a, 0, -1, 0, 1);
  expect_root(a, 1, 1, 0, 1);

  RootSet b = roots_of("(x-1)^2*x");
  ASSERT_EQ(b.distinct_count(), 2u);
  expect_root(b, 0, 0, 0, 1);
  expect_root(b, 1, 1, 0, 2);
  EXPECT_TRUE(b.exact_multiplicities);

  RootSet c = roots_of("x^2 + 1");
  ASSERT_EQ(c.distinct_count(), 2u);
  expect_root(c, 0, 0, -1, 1);
  expect_root(c, 1, 0, 1, 1);
}

TEST(Roots, SepExamples) {
  EXPECT_NEAR(sep(roots_of("x^2 - 1"), 0).mid_d(), 2.0, 1e-30);
  EXPECT_NEAR(sep(roots_of("(x-1)^2*x"), 1).mid_d(), 1.0, 1e-30);
  RootSet t = roots_of("x^3 - x");
  EXPECT_NEAR(sep(t, 0).mid_d(), 1.0, 1e-30);
  EXPECT_EQ(sep_partner(t, 0), 1u);
  EXPECT_EQ(sep_partner(t, 1), 0u);  // tie between -1 and 1: smallest index wins
  EXPECT_THROW(sep(roots_of("(x-1)^3"), 0), std::invalid_argument);
}

TEST(Roots, LeadingCoefficient) {
  RootSet a = roots_of("2x^2 - 2");
  EXPECT_FALSE(a.leading_is_one);
  EXPECT_NEAR(a.leading.re.mid_d(), 2.0, 1e-30);
  EXPECT_TRUE(roots_of("x^2 - 2").leading_is_one);
  EXPECT_EQ(a.total_degree, 2u);
}

TEST(Roots, CloseRootsSeparateAtHigherPrecision) {
  // Two roots 1e-30 apart cannot be separated at 64 bits without escalation.
  RootSet rs = find_roots(test::poly("(x - 1)(x - 1 - 1/1000000000000000000000000000000)"),
                          RootOptions{64, 4, false, std::nullopt});
  EXPECT_EQ(rs.distinct_count(), 2u);
  EXPECT_GT(rs.precision, 64);
  EXPECT_THROW(find_roots(test::poly("(x - 1)(x - 1 - 1/1000000000000000000000000000000)"),
                          RootOptions{64, 0, false, std::nullopt}),
               RootCertificationError);
}

TEST(Roots, NumericClustersMergeIntoMultipleRoot) {
  Polynomial p = parse_polynomial("x^3 - 2.0x^2 + x", 128);  // (x-1)^2 x
  RootSet rs = find_roots(p, RootOptions{128, 4, false, std::nullopt});
  ASSERT_EQ(rs.distinct_count(), 2u);
  EXPECT_EQ(rs[1].multiplicity, 2);
  EXPECT_FALSE(rs.exact_multiplicities);
}

// Residual and ordering properties on random exact polynomials.
TEST(RootsProperty, ResidualOrderingAndSep) {
  test::Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<GaussQ, int>> rts;
    std::size_t r = static_cast<std::size_t>(g.range(2, 7));
    while (rts.size() < r) {
      GaussQ q = g.gauss(6, 4, g.range(0, 2) == 0);
      bool dup = std::any_of(rts.begin(), rts.end(), [&](const auto& e) { return e.first == q; });
      if (!dup) rts.emplace_back(q, static_cast<int>(g.range(1, 3)));
    }
    ExactPoly p = ExactPoly::from_roots(GaussQ(g.range(1, 4)), rts);
    RootSet rs = find_roots(p, RootOptions{128, 4, false, std::nullopt});
    ASSERT_EQ(rs.distinct_count(), r);

    // Every exact root lies inside exactly one certified box with the right multiplicity.
    for (const auto& [q, m] : rts) {
      CInterval exact = q.enclose(rs.precision);
      int hits = 0;
      for (const auto& e : rs.entries) {
        if (e.box().overlaps(exact)) {
          ++hits;
          EXPECT_EQ(e.multiplicity, m);
        }
      }
      EXPECT_EQ(hits, 1);
    }

    // Canonical order is a total order: a shuffled copy sorts back identically.
    std::vector<RootEntry> shuffled = rs.entries;
    std::reverse(shuffled.begin(), shuffled.end());
    canonical_sort(shuffled);
    for (std::size_t j = 0; j < r; ++j) {
      EXPECT_TRUE(shuffled[j].value.re == rs[j].value.re && shuffled[j].value.im == rs[j].value.im);
    }

    // min_j sep equals the minimum pairwise distance.
    double min_pair = 1e300, min_sep = 1e300;
    for (std::size_t i = 0; i < r; ++i) {
      min_sep = std::min(min_sep, sep(rs, i).mid_d());
      for (std::size_t j = i + 1; j < r; ++j) min_pair = std::min(min_pair, abs(rs[i].box() - rs[j].box()).mid_d());
    }
    EXPECT_NEAR(min_sep, min_pair, 1e-25);
  }
}

TEST(RootsKernels, SerialAndOpenMPStepsAreBitIdentical) {
  test::Gen g(3);
  const Precision prec = 192;
  std::vector<Complex> coeffs;
  for (int k = 0; k < 17; ++k) coeffs.emplace_back(g.real(-3, 3), g.real(-3, 3), prec);
  coeffs.back() = Complex(1.0, 0.0, prec);
  std::vector<Complex> a = kernels::aberth_initial(coeffs, prec), b = a;
  for (int it = 0; it < 25; ++it) {
    double ca = kernels::aberth_step_serial(coeffs, a);
    double cb = kernels::aberth_step_omp(coeffs, b);
    EXPECT_EQ(ca, cb);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].re == b[i].re && a[i].im == b[i].im) << "root " << i;
  }
  std::vector<Complex> s = kernels::aberth_solve(coeffs, kernels::aberth_initial(coeffs, prec), prec, false);
  std::vector<Complex> o = kernels::aberth_solve(coeffs, kernels::aberth_initial(coeffs, prec), prec, true);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(s[i].re == o[i].re && s[i].im == o[i].im);
}
