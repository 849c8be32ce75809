#include "polaris/character.hpp"
#include "polaris/oracle.hpp"
#include "polaris/rootsys.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace polaris;

namespace {

struct TypeCase {
  char type;
  int rank;
  std::size_t positive;
};

std::size_t classical_positive_count(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST(RootSystem, RankOneCase) {
  RootSystem a1('A', 1);
  EXPECT_EQ(a1.positive_roots().size(), 1u);
  EXPECT_EQ(a1.weyl_order(), 2);
}

TEST(RootSystem, G2AgainstReflectionClosure) {
  RootSystem g2('G', 2);
  EXPECT_EQ(g2.positive_roots().size(), 6u);
  EXPECT_EQ(oracle::positive_root_count_by_reflection(g2), 6u);
  EXPECT_EQ(g2.weyl_order(), 12);
  EXPECT_EQ(oracle::weyl_order_by_orbit(g2), 12u);
  EXPECT_EQ(oracle::weyl_order_from_heights(g2), 12);
}

TEST(RootSystem, D8AgainstReflectionClosure) {
  RootSystem d8('D', 8);
  EXPECT_EQ(d8.positive_roots().size(), 56u);
  EXPECT_EQ(oracle::positive_root_count_by_reflection(d8), 56u);
  const BigInt expected = factorial(8) * 128;  // 8! * 2^7
  EXPECT_EQ(d8.weyl_order(), expected);
  EXPECT_EQ(oracle::weyl_order_from_heights(d8), expected);
}

TEST(RootSystem, InvariantsAcrossTypes) {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 4}, {'B', 2}, {'B', 5}, {'C', 3}, {'C', 4},
                                                   {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4},
                                                   {'G', 2}};
  for (auto [t, n] : types) {
    SCOPED_TRACE(std::string(1, t) + std::to_string(n));
    RootSystem rs(t, n);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(rs.cartan()[i][i], 2);
      for (int j = 0; j < n; ++j)
        if (i != j) EXPECT_LE(rs.cartan()[i][j], 0);
      EXPECT_EQ(rs.rho()[i], 1);
    }
    EXPECT_EQ(rs.positive_roots().size(), classical_positive_count(t, n));
    EXPECT_EQ(oracle::positive_root_count_by_reflection(rs), classical_positive_count(t, n));
    EXPECT_EQ(oracle::weyl_order_from_heights(rs), rs.weyl_order());
  }
}

TEST(RootSystem, SmallWeylOrdersByOrbit) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}}) {
    RootSystem rs(t, n);
    EXPECT_EQ(BigInt(oracle::weyl_order_by_orbit(rs)), rs.weyl_order()) << t << n;
  }
}

TEST(RootSystem, RejectsInvalidTypes) {
  EXPECT_THROW(RootSystem('C', 2), std::invalid_argument);
  EXPECT_THROW(RootSystem('B', 1), std::invalid_argument);
  EXPECT_THROW(RootSystem('D', 2), std::invalid_argument);
  EXPECT_THROW(RootSystem('E', 9), std::invalid_argument);
  EXPECT_THROW(RootSystem('F', 3), std::invalid_argument);
  EXPECT_THROW(RootSystem('X', 3), std::invalid_argument);
  EXPECT_THROW(RootSystem('A', 0), std::invalid_argument);
}

TEST(RootSystem, BourbakiNumbering) {
  // B_n: alpha_n short; C_n: alpha_n long; G2: alpha_1 short.
  RootSystem b3('B', 3), c3('C', 3), g2('G', 2), f4('F', 4);
  EXPECT_EQ(b3.cartan()[2][1], -2);
  EXPECT_EQ(b3.cartan()[1][2], -1);
  EXPECT_EQ(c3.cartan()[2][1], -1);
  EXPECT_EQ(c3.cartan()[1][2], -2);
  EXPECT_GT(g2.simple_root_norm(1), g2.simple_root_norm(0));
  EXPECT_GT(f4.simple_root_norm(0), f4.simple_root_norm(3));
}

TEST(WeylDimension, Examples) {
  EXPECT_EQ(weyl_dimension(RootSystem('A', 1), Weight{1}), 2);
  EXPECT_EQ(weyl_dimension(RootSystem('A', 3), Weight{3, 0, 0}), binomial(6, 3));
  auto d8 = RootSystem::get('D', 8);
  Weight spin{0, 0, 0, 0, 0, 0, 0, 1};
  EXPECT_EQ(weyl_dimension(*d8, spin), 128);
  BigInt total = 0;
  for (const auto& [mu, m] : d8->dominant_multiplicities(spin)) total += m * BigInt(d8->orbit(mu).size());
  EXPECT_EQ(total, 128);
}

TEST(WeylDimension, FundamentalModulesUnderBourbakiLabels) {
  EXPECT_EQ(weyl_dimension(RootSystem('B', 3), Weight{0, 0, 1}), 8);
  EXPECT_EQ(weyl_dimension(RootSystem('B', 5), Weight{0, 0, 0, 0, 1}), 32);
  EXPECT_EQ(weyl_dimension(RootSystem('C', 3), Weight{0, 1, 0}), 14);
  EXPECT_EQ(weyl_dimension(RootSystem('C', 3), Weight{0, 0, 1}), 14);
  EXPECT_EQ(weyl_dimension(RootSystem('G', 2), Weight{1, 0}), 7);
  EXPECT_EQ(weyl_dimension(RootSystem('F', 4), Weight{0, 0, 0, 1}), 26);
  EXPECT_EQ(weyl_dimension(RootSystem('F', 4), Weight{1, 0, 0, 0}), 52);
  EXPECT_EQ(weyl_dimension(RootSystem('E', 6), Weight{1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dimension(RootSystem('A', 8), Weight{0, 0, 1, 0, 0, 0, 0, 0}), 84);
}

TEST(WeylDimension, RejectsNonDominant) {
  EXPECT_THROW(weyl_dimension(RootSystem('A', 2), Weight{1, -1}), std::invalid_argument);
  EXPECT_THROW(irrep_character(RootSystem::get('A', 2), Weight{-1, 0}), std::invalid_argument);
}

TEST(WeylDimension, OneOnlyForZero) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'D', 4}}) {
    RootSystem rs(t, n);
    EXPECT_EQ(weyl_dimension(rs, rs.zero()), 1);
    for (int i = 0; i < n; ++i) {
      Weight w = rs.zero();
      w.set(i, 1);
      EXPECT_GT(weyl_dimension(rs, w), 1);
    }
  }
}

TEST(IrrepCharacter, A1StringOfWeights) {
  auto chi = irrep_character(RootSystem::get('A', 1), Weight{4});
  EXPECT_EQ(chi.size(), 5u);
  for (int w : {-4, -2, 0, 2, 4}) EXPECT_EQ(chi.multiplicity(Weight{w}), 1);
}

TEST(IrrepCharacter, A2AdjointZeroWeight) {
  auto a2 = RootSystem::get('A', 2);
  // C^3 has weights e1=[1,0], e2=[-1,1], e3=[0,-1]; C^3 (x) (C^3)* minus the trivial summand.
  FormalCharacter std3(a2);
  for (auto w : {Weight{1, 0}, Weight{-1, 1}, Weight{0, -1}}) std3.add(w, 1);
  FormalCharacter table = oracle::tensor_by_table(std3, dualize(std3));
  table.add(Weight{0, 0}, -1);
  auto adj = irrep_character(a2, Weight{1, 1});
  EXPECT_EQ(adj.multiplicity(Weight{0, 0}), 2);
  EXPECT_EQ(adj, table);
}

TEST(IrrepCharacter, B2VectorModule) {
  auto b2 = RootSystem::get('B', 2);
  auto chi = irrep_character(b2, Weight{1, 0});
  EXPECT_EQ(chi.size(), 5u);
  EXPECT_EQ(chi.multiplicity(Weight{0, 0}), 1);
  auto orbit = b2->orbit(Weight{1, 0});
  EXPECT_EQ(orbit.size(), 4u);
  for (const auto& w : orbit) EXPECT_EQ(chi.multiplicity(w), 1);
}

// Sum of multiplicities equals the Weyl dimension, and characters are Weyl invariant,
// for every dominant weight of dimension <= 200 in a range of small types.
TEST(IrrepCharacter, TotalMultiplicityAndWeylInvariance) {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                   {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}};
  int checked = 0;
  for (auto [t, n] : types) {
    auto rs = RootSystem::get(t, n);
    std::vector<int> coords(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        Weight lambda(std::span<const int>(coords.data(), coords.size()));
        BigInt dim = weyl_dimension(*rs, lambda);
        if (dim > 200) return;
        auto chi = irrep_character(rs, lambda);
        EXPECT_EQ(chi.dimension(), dim) << rs->name() << " " << lambda;
        EXPECT_TRUE(is_weyl_symmetric(chi)) << rs->name() << " " << lambda;
        ++checked;
        return;
      }
      for (int c = 0; c <= 6; ++c) {
        coords[pos] = c;
        self(self, pos + 1);
      }
      coords[pos] = 0;
    };
    rec(rec, 0);
  }
  EXPECT_GT(checked, 100);
}

TEST(RootSystem, DualHighestWeights) {
  auto a3 = RootSystem::get('A', 3);
  EXPECT_EQ(a3->dual(Weight{3, 0, 0}), (Weight{0, 0, 3}));
  auto d5 = RootSystem::get('D', 5);
  EXPECT_EQ(d5->dual(Weight{0, 0, 0, 0, 1}), (Weight{0, 0, 0, 1, 0}));
  auto d8 = RootSystem::get('D', 8);
  EXPECT_EQ(d8->dual(Weight{0, 0, 0, 0, 0, 0, 0, 1}), (Weight{0, 0, 0, 0, 0, 0, 0, 1}));
}
