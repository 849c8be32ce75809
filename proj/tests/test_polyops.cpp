#include "polaris/oracle.hpp"
#include "polaris/polynomial.hpp"
#include "polaris/properties.hpp"
#include "polaris/span.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polaris;

namespace {

Polynomial P(const std::string& text, int blocks, int coords) { return parse_polynomial(text, blocks, coords); }

}  // namespace

TEST(PolynomialText, RoundTripAndShape) {
  auto p = parse_polynomial("3/2 * x[1][2]^2 * x[2][1] - x[1][1] + 4");
  EXPECT_EQ(p.blocks(), 2);
  EXPECT_EQ(p.coords(), 2);
  EXPECT_EQ(p.str(), "3/2 * x[1][2]^2 * x[2][1] - x[1][1] + 4");
  EXPECT_EQ(parse_polynomial(p.str(), 2, 2), p);
  EXPECT_EQ(parse_polynomial(" x[1][1]*x[1][1] ").str(), "x[1][1]^2");
  EXPECT_EQ(parse_polynomial("x[1][1] - x[1][1]").str(), "0");
}

TEST(PolynomialText, ErrorsCarryPositions) {
  try {
    parse_polynomial("x[1][1] + * 3");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("position 11"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_polynomial("x[0][1]"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1/0 * x[1][1]"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x[1][3]", 1, 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial(""), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x[1][1] x[1][2]"), std::invalid_argument);
}

TEST(Polynomial, Arithmetic) {
  auto x = P("x[1][1]", 1, 2), y = P("x[1][2]", 1, 2);
  EXPECT_EQ((x + y).pow(2), P("x[1][1]^2 + 2*x[1][1]*x[1][2] + x[1][2]^2", 1, 2));
  EXPECT_EQ((x * y).multidegree(), (MultiDegree{2}));
  EXPECT_FALSE((x + x * y).homogeneous_degree());
  Matrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ((x * x * y).substitute(swap), y * y * x);
  EXPECT_EQ(P("x[1][1]*x[1][2]^2", 1, 2).evaluate({2, 3}), 18);
}

TEST(Polarize, CubeOfOneVariable) {
  auto pieces = polarize(P("x[1][1]^3", 1, 1), 2);
  ASSERT_EQ(pieces.size(), 4u);
  EXPECT_EQ(pieces.at(MultiDegree{2, 1}), P("3*x[1][1]^2*x[2][1]", 2, 1));
  EXPECT_EQ(pieces.at(MultiDegree{3, 0}), P("x[1][1]^3", 2, 1));
  EXPECT_EQ(pieces.at(MultiDegree{0, 3}), P("x[2][1]^3", 2, 1));
}

TEST(Polarize, QuadraticFormGivesBilinearForm) {
  auto q = P("x[1][1]^2 + x[1][2]^2 + x[1][3]^2", 1, 3);
  auto pieces = polarize(q, 2);
  EXPECT_EQ(pieces.at(MultiDegree{1, 1}), P("2*x[1][1]*x[2][1] + 2*x[1][2]*x[2][2] + 2*x[1][3]*x[2][3]", 2, 3));
  EXPECT_EQ(pieces.at(MultiDegree{2, 0}), q.embed(2, 0));
}

TEST(Polarize, DeterminantOnTwoCopiesOfC2) {
  // V = C^2 + C^2 with coordinates (v1, v2, w1, w2); det(v, w) = v1 w2 - v2 w1.
  auto det = P("x[1][1]*x[1][4] - x[1][2]*x[1][3]", 1, 4);
  auto pieces = polarize(det, 2);
  // det(v, w') + det(v', w)
  auto expected = P("x[1][1]*x[2][4] - x[1][2]*x[2][3] + x[2][1]*x[1][4] - x[2][2]*x[1][3]", 2, 4);
  EXPECT_EQ(pieces.at(MultiDegree{1, 1}), expected);
  EXPECT_TRUE(restitute(pieces, det).ok);
}

TEST(Polarize, RejectsNonHomogeneous) {
  EXPECT_THROW(polarize(P("x[1][1]^2 + x[1][1]", 1, 1), 2), std::invalid_argument);
  EXPECT_THROW(polarize(Polynomial(1, 2), 2), std::invalid_argument);
  EXPECT_THROW(polarize(P("x[1][1]", 1, 1), 0), std::invalid_argument);
}

TEST(Restitute, Examples) {
  std::vector<std::vector<Rational>> at = {{1}, {2}};
  EXPECT_TRUE(restitute(polarize(P("x[1][1]^3", 1, 1), 2), P("x[1][1]^3", 1, 1), at).ok);
  auto q = P("x[1][1]^2 + x[1][2]^2 + x[1][3]^2", 1, 3);
  EXPECT_TRUE(restitute(polarize(q, 2), q, {{1, 2, 3}}).ok);

  auto one = Polynomial::constant(1, 2, 1);
  auto pieces = polarize(one, 3);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces.begin()->first, (MultiDegree{0, 0, 0}));
  EXPECT_EQ(pieces.begin()->second, Polynomial::constant(3, 2, 1));
  EXPECT_TRUE(restitute(pieces, one).ok);

  std::mt19937_64 rng(5);
  auto f = props::random_homogeneous(rng, 3, 4, 8);
  EXPECT_TRUE(restitute(polarize(f, 3), f).ok);
}

TEST(Restitute, NamesTheFailingPiece) {
  auto q = P("x[1][1]^2 + x[1][2]^2", 1, 2);
  auto pieces = polarize(q, 2);
  pieces.at(MultiDegree{1, 1}) *= 3;
  auto report = restitute(pieces, q);
  EXPECT_FALSE(report.ok);
  ASSERT_FALSE(report.failures.empty());
  EXPECT_NE(report.failures.front().find("(1,1)"), std::string::npos);
}

TEST(Coalgebra, Examples) {
  auto x = P("x[1][1]", 1, 1);
  EXPECT_TRUE(coalgebra_check(x, x, 2).ok);
  EXPECT_TRUE(coalgebra_check(P("x[1][1]^2", 1, 2), P("x[1][2]^3", 1, 2), 2).ok);
  auto q = P("x[1][1]^2 + x[1][2]^2 + x[1][3]^2", 1, 3);
  EXPECT_TRUE(coalgebra_check(q, q, 3).ok);
}

TEST(SpanDimension, Examples) {
  EXPECT_EQ(span_dimension({P("x[1][1]^2", 1, 1), P("2*x[1][1]^2", 1, 1)}, MultiDegree{2}), 1u);
  EXPECT_EQ(span_dimension({P("x[1][1]*x[2][2] + x[1][2]*x[2][1]", 2, 2), P("x[1][1]*x[2][2] - x[1][2]*x[2][1]", 2, 2)},
                           MultiDegree{1, 1}),
            2u);
  EXPECT_EQ(span_dimension({Polynomial(1, 1)}, MultiDegree{3}), 0u);
  EXPECT_THROW(span_dimension({P("x[1][1]^2", 2, 1), P("x[1][1]*x[2][1]", 2, 1)}, MultiDegree{2, 0}),
               std::invalid_argument);
}

TEST(SpanDimension, PolarizedBasicInvariantsOfB2Weyl) {
  // Basic invariants of the signed permutations of C^2.
  auto f2 = P("x[1][1]^2 + x[1][2]^2", 1, 2);
  auto f4 = P("x[1][1]^4 + x[1][2]^4", 1, 2);
  auto p2 = polarize(f2, 2), p4 = polarize(f4, 2);
  std::vector<Polynomial> products = {p2.at({2, 0}) * p2.at({0, 2}), p2.at({1, 1}) * p2.at({1, 1}), p4.at({2, 2}),
                                      f2.embed(2, 0) * p2.at({0, 2})};
  auto rank = span_dimension(products, MultiDegree{2, 2});
  EXPECT_EQ(rank, oracle::rank_over_monomials(products));
  EXPECT_EQ(rank, 3u);
}

TEST(Echelon, MembershipAndBasis) {
  EchelonBasis b;
  EXPECT_TRUE(b.insert(P("x[1][1]^2 + x[1][2]^2", 1, 2)));
  EXPECT_TRUE(b.insert(P("x[1][1]^2 - x[1][2]^2", 1, 2)));
  EXPECT_FALSE(b.insert(P("1/3*x[1][1]^2", 1, 2)));
  EXPECT_TRUE(b.contains(P("x[1][2]^2", 1, 2)));
  EXPECT_FALSE(b.contains(P("x[1][1]*x[1][2]", 1, 2)));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_EQ(b.basis().size(), 2u);
}

// ---------------------------------------------------------------------------------
// Properties

TEST(Properties, RestitutionIdentity) {
  auto r = props::restitution_identity(21);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.instances, 100);
}

TEST(Properties, CoalgebraLaw) {
  auto r = props::coalgebra_law(22);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.instances, 100);
}

TEST(Properties, PolarizationIsInjective) {
  auto r = props::polarization_injectivity(23);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.instances, 100);
}

TEST(Properties, PolarizationCommutesWithLinearSubstitution) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> n(1, 3), d(1, 3), k(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int coords = n(rng), copies = k(rng);
    auto f = props::random_homogeneous(rng, coords, d(rng), 4);
    auto g = props::random_invertible(rng, coords);
    auto lhs = polarize(f.substitute(g), copies);
    auto rhs = polarize(f, copies);
    for (const auto& [alpha, piece] : rhs) ASSERT_EQ(lhs.at(alpha), piece.substitute(g)) << alpha.str();
  }
}

TEST(Properties, EchelonRankMatchesDenseOracle) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> n(1, 3), d(1, 3), count(1, 7);
  for (int trial = 0; trial < 120; ++trial) {
    int coords = n(rng), degree = d(rng);
    std::vector<Polynomial> ps;
    int c = count(rng);
    for (int i = 0; i < c; ++i) {
      auto p = props::random_homogeneous(rng, coords, degree, 3);
      // Mix in combinations of earlier rows so dependencies actually occur.
      if (!ps.empty() && i % 2 == 1) p = ps.back() * random_rational(rng) + ps.front();
      if (!p.is_zero()) ps.push_back(p);
    }
    ASSERT_EQ(span_dimension(ps, MultiDegree{degree}), oracle::rank_over_monomials(ps));
  }
}
