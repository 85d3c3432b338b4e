#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmb;
using dmb::test::poly;

TEST(Poly, ZeroPolynomialHasNoDegree) {
  ExactPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW((void)z.degree(), std::logic_error);
  EXPECT_TRUE(derivative(ExactPoly::constant(GaussQ(5))).is_zero());
}

TEST(Poly, EvalExamples) {
  const Precision p = 128;
  auto at = [&](const std::string& s, double x) { return eval(poly(s), Complex(x, 0, p), p).value.re.to_double(); };
  EXPECT_EQ(at("x^2 - 1", 0), -1.0);
  EXPECT_EQ(at("x^2 - 1", 1), 0.0);
  EXPECT_EQ(at("x^3 - 2x + 1", 2), 5.0);
}

TEST(Poly, EvalRadiusCoversExactValue) {
  const Precision p = 64;
  ExactPoly q = poly("(x - 1/3)^5 * (x + 2/7)^2");
  Complex z(0.123456789, -0.75, p);
  EvalResult r = eval(q, z, p);
  CInterval enc = eval_enclosure(q, CInterval::point(z));
  Complex hi = eval(q, Complex(0.123456789, -0.75, 512), 512).value;
  EXPECT_LE(std::fabs(r.value.re.to_double() - hi.re.to_double()), r.radius.to_double() + 1e-300);
  EXPECT_TRUE(enc.re.contains(hi.re) || enc.re.overlaps(Interval::point(hi.re)));
}

TEST(Poly, DerivativeExamples) {
  EXPECT_EQ(derivative(poly("x^2 - 1")), poly("2x"));
  EXPECT_EQ(derivative(poly("x^3 - 2x + 1")), poly("3x^2 - 2"));
}

TEST(Poly, GcdExamples) {
  EXPECT_EQ(gcd_exact(poly("x^2 - 1"), poly("x - 1")), poly("x - 1"));
  EXPECT_EQ(gcd_exact(poly("x^2 + 1"), poly("x^2 - 1")), poly("1"));
  EXPECT_EQ(gcd_exact(poly("(x-1)^2 x"), poly("(x-1) x^2")), poly("x^2 - x"));
  EXPECT_THROW(gcd_exact(ExactPoly{}, ExactPoly{}), std::invalid_argument);
  EXPECT_EQ(gcd_exact(ExactPoly{}, poly("2x - 4")), poly("x - 2"));
}

TEST(Poly, SquareFreeExamples) {
  auto sf = square_free_decomposition(poly("x^2 - 1"));
  ASSERT_EQ(sf.size(), 1u);
  EXPECT_EQ(sf[0].factor, poly("x^2 - 1"));
  EXPECT_EQ(sf[0].multiplicity, 1);

  sf = square_free_decomposition(poly("(x-1)^2*x"));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].factor, poly("x"));
  EXPECT_EQ(sf[0].multiplicity, 1);
  EXPECT_EQ(sf[1].factor, poly("x - 1"));
  EXPECT_EQ(sf[1].multiplicity, 2);

  sf = square_free_decomposition(poly("(x-1)^3"));
  ASSERT_EQ(sf.size(), 1u);
  EXPECT_EQ(sf[0].factor, poly("x - 1"));
  EXPECT_EQ(sf[0].multiplicity, 3);

  EXPECT_THROW(square_free_decomposition(poly("7")), std::invalid_argument);
}

TEST(Poly, GaussianCoefficients) {
  ExactPoly q = poly("(x - i)^2 (x + 1/2 + 3i)");
  auto sf = square_free_decomposition(q);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[1].factor, poly("x - i"));
  EXPECT_FALSE(q.has_rational_coeffs());
}

TEST(Poly, DivisionRoundTrip) {
  ExactPoly a = poly("x^5 - 3x^2 + 1/2"), b = poly("2x^2 + i");
  DivMod qr = divmod(a, b);
  EXPECT_EQ(qr.quotient * b + qr.remainder, a);
  EXPECT_LT(qr.remainder.degree(), b.degree());
  EXPECT_THROW(exact_div(a, b), std::domain_error);
  EXPECT_THROW(divmod(a, ExactPoly{}), std::domain_error);
}

// Random products of linear and quadratic factors with multiplicities up to 4.
TEST(PolyProperty, SquareFreeReconstructsAndGcdDegree) {
  test::Gen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    GaussQ lead = g.gauss(5, 3, g.coin());
    if (lead.is_zero()) lead = GaussQ(3);
    ExactPoly p = ExactPoly::constant(lead);
    int factors = static_cast<int>(g.range(1, 3));
    std::size_t distinct = 0;
    std::vector<ExactPoly> used;
    for (int f = 0; f < factors; ++f) {
      ExactPoly fac = g.coin() ? poly("x") - ExactPoly::constant(g.gauss(6, 3))
                               : poly("x^2") + ExactPoly::constant(GaussQ(g.range(1, 9)));
      if (std::find(used.begin(), used.end(), fac) != used.end()) continue;
      used.push_back(fac);
      distinct += fac.degree();
      p = p * pow(fac, static_cast<unsigned>(g.range(1, 4)));
    }
    auto sf = square_free_decomposition(p);
    ExactPoly rebuilt = ExactPoly::constant(p.leading());
    std::size_t r = 0;
    for (const auto& f : sf) {
      EXPECT_TRUE(f.factor.is_monic());
      rebuilt = rebuilt * pow(f.factor, static_cast<unsigned>(f.multiplicity));
      r += f.factor.degree();
    }
    EXPECT_EQ(rebuilt, p);
    EXPECT_EQ(r, distinct);
    ExactPoly g2 = gcd_exact(p, derivative(p));
    std::size_t gd = g2.degree();
    EXPECT_EQ(gd, p.degree() - r);
  }
}

TEST(Poly, NumericFromExact) {
  NumericPoly n = NumericPoly::from_exact(poly("x^2 - 1/3"), 128);
  EXPECT_EQ(n.degree(), 2u);
  EXPECT_TRUE(n.is_monic());
  EXPECT_EQ(derivative(n).degree(), 1u);
}
