#include <gtest/gtest.h>

#include "support.hpp"
#include "dmb/divdiff.hpp"

using namespace dmb;
using dmb::test::cpoint;

namespace {

NodeList nodes(std::initializer_list<double> xs) {
  std::vector<CInterval> v;
  for (double x : xs) v.push_back(cpoint(x));
  return NodeList(std::move(v));
}

std::vector<CInterval> values(const NodeList& n, long p) {
  std::vector<CInterval> out;
  for (const auto& v : n.nodes()) out.push_back(pow(v, p));
  return out;
}

double re(const CInterval& z) { return z.re.mid_d(); }

}  // namespace

TEST(DivDiff, RecursiveExamples) {
  NodeList n = nodes({1, 2});
  EXPECT_DOUBLE_EQ(re(divdiff_recursive(values(n, 2), n)), 3.0);
  EXPECT_DOUBLE_EQ(re(divdiff_recursive(values(n, 3), n)), 7.0);
  NodeList one = nodes({5});
  EXPECT_DOUBLE_EQ(re(divdiff_recursive(values(one, 3), one)), 125.0);
}

TEST(DivDiff, ExplicitExamples) {
  NodeList n = nodes({1, 3});
  EXPECT_DOUBLE_EQ(re(divdiff_explicit(values(n, 0), n)), 0.0);
  EXPECT_DOUBLE_EQ(re(divdiff_explicit(values(n, 1), n)), 1.0);
  NodeList m = nodes({1, 2});
  EXPECT_DOUBLE_EQ(re(divdiff_explicit(values(m, 2), m)), 3.0);
}

TEST(DivDiff, MonomialExamples) {
  EXPECT_TRUE(divdiff_monomial(1, nodes({1, 2, 3})).contains_zero());
  EXPECT_EQ(divdiff_monomial(1, nodes({1, 2, 3})).rad().to_double(), 0.0);
  EXPECT_DOUBLE_EQ(re(divdiff_monomial(2, nodes({1, 2}))), 3.0);
  EXPECT_DOUBLE_EQ(re(divdiff_monomial(3, nodes({1, 2}))), 7.0);
}

TEST(DivDiff, VectorExamples) {
  NodeList n = nodes({1, 3});
  std::vector<std::vector<CInterval>> rows = {{cpoint(1), cpoint(1)}, {cpoint(1), cpoint(3)}};
  auto v = divdiff_vector(rows, n);
  EXPECT_DOUBLE_EQ(re(v[0]), 0.0);
  EXPECT_DOUBLE_EQ(re(v[1]), 1.0);

  auto single = divdiff_vector({{cpoint(1), cpoint(2), cpoint(4)}}, nodes({2}));
  EXPECT_DOUBLE_EQ(re(single[2]), 4.0);

  NodeList three = nodes({0, 1, 2});
  std::vector<std::vector<CInterval>> f;
  for (double x : {0.0, 1.0, 2.0}) f.push_back({cpoint(1), cpoint(x), cpoint(x * x)});
  auto w = divdiff_vector(f, three);
  EXPECT_DOUBLE_EQ(re(w[0]), 0.0);
  EXPECT_DOUBLE_EQ(re(w[1]), 0.0);
  EXPECT_DOUBLE_EQ(re(w[2]), 1.0);

  EXPECT_THROW(divdiff_vector({{cpoint(1)}, {cpoint(1), cpoint(2)}}, nodes({0, 1})), std::invalid_argument);
}

TEST(DivDiff, DuplicateNodesRejected) {
  EXPECT_THROW(nodes({1, 2, 1}), std::invalid_argument);
  // Overlapping enclosures count as possibly equal.
  CInterval a = CInterval::disk(Complex(1.0, 0.0, 128), Real(1e-3, 128));
  CInterval b = CInterval::disk(Complex(1.0005, 0.0, 128), Real(1e-3, 128));
  EXPECT_THROW(NodeList({a, b}), std::invalid_argument);
}

TEST(DivDiffProperty, RoutesAgreeAndExplicitIsSymmetric) {
  test::Gen g(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.range(1, 8));
    long p = g.range(0, 10);
    std::vector<CInterval> pts;
    while (pts.size() < n) {
      CInterval z = cpoint(g.real(-2, 2), g.real(-2, 2));
      bool close = std::any_of(pts.begin(), pts.end(), [&](const CInterval& w) { return abs(w - z).mid_d() < 0.05; });
      if (!close) pts.push_back(z);
    }
    NodeList nl(pts);
    auto vals = values(nl, p);
    CInterval a = divdiff_recursive(vals, nl), b = divdiff_explicit(vals, nl), c = divdiff_monomial(p, nl);
    double scale = std::max(1.0, abs(c).mid_d());
    EXPECT_LE(abs(a - c).mid_d(), 1e-12 * scale);
    EXPECT_LE(abs(b - c).mid_d(), 1e-12 * scale);
    if (static_cast<long>(n) >= p + 2) {
      EXPECT_TRUE(c.contains_zero());
      EXPECT_TRUE(a.contains_zero()) << "recursive route must enclose the exact zero";
    }

    std::vector<CInterval> rp(pts.rbegin(), pts.rend());
    NodeList rev(rp);
    CInterval br = divdiff_explicit(values(rev, p), rev);
    EXPECT_LE(abs(br - b).mid_d(), 1e-25 * scale);
  }
}
