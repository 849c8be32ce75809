#include "polaris/fingrp.hpp"
#include "polaris/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace polaris;

namespace {

Polynomial P(const std::string& text, int blocks, int coords) { return parse_polynomial(text, blocks, coords); }

// Dimension of the span of Reynolds images of every monomial of multidegree beta.
std::size_t reynolds_span_oracle(const FiniteGroup& g, const MultiDegree& beta) {
  std::vector<Polynomial> images;
  for (const auto& m : monomials_of(g.dimension(), beta)) {
    Polynomial mono(static_cast<int>(beta.size()), g.dimension());
    mono.add_term(m, 1);
    images.push_back(reynolds(g, mono));
  }
  return oracle::rank_over_monomials(images);
}

// Coefficient of t^d in prod_i 1/(1 - t^{deg_i}).
BigInt free_algebra_dim(const std::vector<int>& degrees, int d) {
  std::vector<BigInt> c(static_cast<std::size_t>(d + 1), 0);
  c[0] = 1;
  for (int deg : degrees)
    for (int e = deg; e <= d; ++e) c[e] += c[e - deg];
  return c[d];
}

}  // namespace

TEST(GenerateGroup, Orders) {
  EXPECT_EQ(symmetric_group(3).order(), 6u);
  EXPECT_EQ(symmetric_group(1).order(), 1u);
  EXPECT_EQ(weyl_group('B', 2).order(), 8u);
  EXPECT_EQ(weyl_group('C', 3).order(), 48u);
  EXPECT_EQ(weyl_group('D', 4).order(), 192u);  // 2^3 * 4!
  EXPECT_EQ(weyl_group('A', 2).order(), 6u);
  EXPECT_EQ(weyl_group('G', 2).order(), 12u);
}

TEST(GenerateGroup, ElementsAreClosedAndStartAtIdentity) {
  auto g = weyl_group('B', 2);
  EXPECT_TRUE(g.elements().front().is_identity());
  std::set<Matrix> all(g.elements().begin(), g.elements().end());
  for (const auto& x : g.elements()) {
    EXPECT_TRUE(all.count(*x.inverse()));
    for (const auto& y : g.elements()) EXPECT_TRUE(all.count(x * y));
  }
}

TEST(GenerateGroup, Rejections) {
  EXPECT_THROW(generate_group({Matrix{{1, 0}, {0, 0}}}), std::invalid_argument);
  EXPECT_THROW(generate_group({Matrix{{1, 0}, {0, 1}}, Matrix{{1}}}), std::invalid_argument);
  try {
    generate_group({Matrix{{1, 1}, {0, 1}}}, 50);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("50"), std::string::npos);
  }
  EXPECT_THROW(weyl_group('C', 2), std::invalid_argument);
  EXPECT_THROW(named_group("weyl(B,x)"), std::invalid_argument);
  EXPECT_THROW(named_group("dihedral(4)"), std::invalid_argument);
}

TEST(NamedGroups, BuiltinsAndFiles) {
  EXPECT_EQ(named_group("sym(4)").order(), 24u);
  EXPECT_EQ(named_group("weyl(D,4)").order(), 192u);
  const std::string path = testing::TempDir() + "polaris_group.json";
  {
    std::ofstream out(path);
    out << R"({"generators": [[[0, -1], [1, 0]], [["1", 0], [0, "-1"]]]})";
  }
  auto g = named_group("file:" + path);
  EXPECT_EQ(g.order(), 8u);
  std::remove(path.c_str());
  EXPECT_THROW(named_group("file:/nonexistent/group.json"), std::invalid_argument);
}

TEST(Molien, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(molien_dim(s3, MultiDegree{2}), 2);
  EXPECT_EQ(reynolds_span_oracle(s3, MultiDegree{2}), 2u);
  auto b2 = weyl_group('B', 2);
  EXPECT_EQ(molien_dim(b2, MultiDegree{4}), 2);
  EXPECT_EQ(reynolds_span_oracle(b2, MultiDegree{4}), 2u);
  EXPECT_EQ(molien_dim(b2, MultiDegree{0, 0}), 1);
  EXPECT_EQ(molien_dim(weyl_group('D', 4), MultiDegree{0, 0, 0}), 1);
}

TEST(Molien, SymTraceOfDegreeTwo) {
  for (const auto& g : {weyl_group('D', 4), symmetric_group(4), weyl_group('G', 2)})
    for (std::size_t e = 0; e < g.order(); ++e) {
      const Matrix& x = g.elements()[e];
      Rational t = x.trace();
      ASSERT_EQ(g.sym_trace(e, 2), (t * t + (x * x).trace()) / 2);
    }
}

TEST(Reynolds, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(reynolds(s3, P("x[1][1]^2", 1, 3)), P("1/3*x[1][1]^2 + 1/3*x[1][2]^2 + 1/3*x[1][3]^2", 1, 3));
  auto inv = P("x[1][1]*x[1][2]*x[1][3]", 1, 3);
  EXPECT_EQ(reynolds(s3, inv), inv);
  EXPECT_TRUE(reynolds(weyl_group('B', 2), P("x[1][1]*x[1][2]", 1, 2)).is_zero());
  EXPECT_THROW(reynolds(s3, P("x[1][1]", 1, 2)), std::invalid_argument);
}

TEST(InvariantBasis, Examples) {
  auto s3 = symmetric_group(3);
  auto b1 = invariant_basis(s3, MultiDegree{1});
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0], P("x[1][1] + x[1][2] + x[1][3]", 1, 3));

  auto d4 = invariant_basis(weyl_group('D', 4), MultiDegree{2});
  ASSERT_EQ(d4.size(), 1u);
  EXPECT_EQ(d4[0], P("x[1][1]^2 + x[1][2]^2 + x[1][3]^2 + x[1][4]^2", 1, 4));

  auto b2 = weyl_group('B', 2);
  auto pol = invariant_basis(b2, MultiDegree{1, 1});
  ASSERT_EQ(pol.size(), 1u);
  EXPECT_EQ(molien_dim(b2, MultiDegree{1, 1}), 1);
  EXPECT_EQ(pol[0], P("x[1][1]*x[2][1] + x[1][2]*x[2][2]", 2, 2));
  for (const auto& p : pol) EXPECT_EQ(reynolds(b2, p), p);
}

TEST(MinimalGenerators, BasicDegreesOfD4) {
  auto g = weyl_group('D', 4);
  auto gens = minimal_generators(g, 8);
  std::vector<int> degrees;
  for (const auto& f : gens) degrees.push_back(*f.homogeneous_degree());
  EXPECT_EQ(degrees, (std::vector<int>{2, 4, 4, 6}));
  // The Molien series agrees with a free algebra on these degrees.
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(molien_dim(g, MultiDegree{d}), free_algebra_dim(degrees, d)) << d;
}

TEST(MinimalGenerators, OtherReflectionGroups) {
  auto degrees_of = [](const FiniteGroup& g, int max) {
    std::vector<int> out;
    for (const auto& f : minimal_generators(g, max)) out.push_back(*f.homogeneous_degree());
    return out;
  };
  EXPECT_EQ(degrees_of(symmetric_group(3), 6), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(degrees_of(weyl_group('B', 2), 8), (std::vector<int>{2, 4}));
  EXPECT_EQ(degrees_of(weyl_group('G', 2), 8), (std::vector<int>{2, 6}));
}

// ---------------------------------------------------------------------------------
// Properties

TEST(Properties, MolienMatchesReynoldsSpan) {
  const std::vector<FiniteGroup> groups = {symmetric_group(3), weyl_group('B', 2), weyl_group('A', 2),
                                           weyl_group('G', 2), symmetric_group(2)};
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::uniform_int_distribution<int> k(1, 2), part(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& g = groups[pick(rng)];
    std::vector<int> parts(static_cast<std::size_t>(k(rng)));
    for (auto& p : parts) p = part(rng);
    MultiDegree beta(parts);
    auto basis = invariant_basis(g, beta);
    ASSERT_EQ(BigInt(basis.size()), molien_dim(g, beta)) << g.name() << " " << beta.str();
    ASSERT_EQ(span_dimension(basis, beta), basis.size());
    if (trial % 4 == 0) ASSERT_EQ(reynolds_span_oracle(g, beta), basis.size()) << g.name() << " " << beta.str();
  }
}

TEST(Properties, MultigradedMolienSumsToSingleGrading) {
  for (const auto& g : {symmetric_group(3), weyl_group('B', 2), weyl_group('D', 4)})
    for (int k = 1; k <= 3; ++k)
      for (int d = 0; d <= 6; ++d) {
        BigInt sum = 0;
        for (const auto& beta : multidegrees_of_total(k, d)) sum += molien_dim(g, beta);
        ASSERT_EQ(sum, molien_dim_total(g, k, d)) << g.name() << " k=" << k << " d=" << d;
      }
}
