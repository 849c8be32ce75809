#include "polaris/oracle.hpp"
#include "polaris/polcheck.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace polaris;

namespace {

Polynomial P(const std::string& text, int blocks, int coords) { return parse_polynomial(text, blocks, coords); }

const char* kDet = "x[1][1]*x[1][4] - x[1][2]*x[1][3]";
const char* kQ5 = "x[1][1]^2 + x[1][2]^2 + x[1][3]^2 + x[1][4]^2 + x[1][5]^2";

std::set<std::string> fired_names(const Representation& rep, int max_degree = 8, const CatalogFacts& facts = {}) {
  std::set<std::string> out;
  for (const auto& c : fired(quick_criteria(rep, max_degree, facts))) out.insert(c.name);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------------
// Descriptors

TEST(RepSpec, ParseAndPrint) {
  auto r = parse_repspec("  B2:phi1+phi2*3 ");
  EXPECT_EQ(r.group, RepSpec::Group::simple);
  EXPECT_EQ(r.type, 'B');
  EXPECT_EQ(r.rank, 2);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[1].copies, 3);
  EXPECT_EQ(r.str(), "B2: phi1 + phi2 * 3");
  for (const char* text : {"A1: R1 * 2", "torus(1): [1,-1] + [2,-2]", "finite(sym(3)): phi1", "A3: [3,0,0]",
                           "finite(weyl(D,4)): phi1 * 2"})
    EXPECT_EQ(parse_repspec(parse_repspec(text).str()), parse_repspec(text)) << text;
}

TEST(RepSpec, ErrorsCarryPositions) {
  auto message = [](const std::string& text) {
    try {
      parse_repspec(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("A1 R1").find("position 4"), std::string::npos);
  EXPECT_NE(message("A1: R1 +").find("position"), std::string::npos);
  EXPECT_NE(message("A1: psi1").find("position 5"), std::string::npos);
  EXPECT_FALSE(message("Q2: phi1").empty());
  EXPECT_FALSE(message("A2: phi3").empty());
  EXPECT_FALSE(message("A2: [1,0,0]").empty());
  EXPECT_FALSE(message("A2: R2").empty());
  EXPECT_FALSE(message("finite(sym(3)): phi2").empty());
  EXPECT_FALSE(message("A1: R1 * 0").empty());
}

TEST(RepSpec, CanonicalKeyMergesCopies) {
  EXPECT_EQ(resolve("A1: R1 + R1").canonical_key(), "A1: R1 * 2");
  EXPECT_EQ(resolve("A1: [1] * 2").canonical_key(), "A1: R1 * 2");
  EXPECT_EQ(resolve("B2: [1,0]").canonical_key(), "B2: phi1");
  EXPECT_EQ(resolve("A1: R1 + R3 + R1").canonical_key(), resolve("A1: R3 + R1 * 2").canonical_key());
}

TEST(RepSpec, Dimensions) {
  EXPECT_EQ(resolve("A1: R1 * 2").dimension(), 4);
  EXPECT_EQ(resolve("D8: phi8").dimension(), 128);
  EXPECT_EQ(resolve("A8: phi3").dimension(), 84);
  EXPECT_EQ(resolve("A3: [3,0,0]").dimension(), 20);
  EXPECT_EQ(resolve("torus(2): [1,0] + [0,1] + [-1,-1]").dimension(), 3);
  EXPECT_EQ(resolve("finite(weyl(D,4)): phi1 * 2").dimension(), 8);
}

TEST(Sampler, ExplicitInvariantsAreFixed) {
  std::mt19937_64 rng(3);
  struct Case {
    const char* rep;
    const char* poly;
    int coords;
  };
  for (const auto& c : {Case{"B2: phi1", kQ5, 5}, Case{"A1: R1 * 2", kDet, 4},
                        Case{"A1: R2", "x[1][2]^2 - 4*x[1][1]*x[1][3]", 3},
                        Case{"D3: phi1", "x[1][1]^2 + x[1][2]^2 + x[1][3]^2 + x[1][4]^2 + x[1][5]^2 + x[1][6]^2", 6},
                        Case{"torus(1): [1,-1,2]", "x[1][1]*x[1][2]", 3}}) {
    auto rep = resolve(c.rep);
    auto sample = rep.sampler();
    ASSERT_TRUE(sample) << c.rep;
    Polynomial p = P(c.poly, 1, c.coords);
    for (int s = 0; s < 10; ++s) EXPECT_EQ(p.substitute((*sample)(rng)), p) << c.rep;
  }
}

TEST(Sampler, SymplecticElementsPreserveTheForm) {
  std::mt19937_64 rng(5);
  auto sample = resolve("C3: phi1").sampler();
  ASSERT_TRUE(sample);
  const Matrix j = sampling::symplectic_form(3);
  for (int s = 0; s < 10; ++s) {
    Matrix g = (*sample)(rng);
    EXPECT_EQ(g.transpose() * j * g, j);
  }
}

TEST(Sampler, NonInvariantsAreRejected) {
  auto rep = resolve("B2: phi1");
  EXPECT_FALSE(verify_generators(rep, explicit_table({P("x[1][1]^2", 1, 5)}, "computed")).empty());
  EXPECT_TRUE(verify_generators(rep, explicit_table({P(kQ5, 1, 5)}, "computed")).empty());
  EXPECT_FALSE(verify_generators(rep, explicit_table({P("x[1][1]^2", 1, 4)}, "computed")).empty());
  auto s3 = resolve("finite(sym(3)): phi1");
  EXPECT_FALSE(verify_generators(s3, explicit_table({P("x[1][1]", 1, 3)}, "computed")).empty());
}

// ---------------------------------------------------------------------------------
// Polarized generators

TEST(PolUpperBound, Examples) {
  EXPECT_EQ(pol_upper_bound({2, 8, 12, 14, 18, 20, 24, 30}, 2, MultiDegree{2, 2}), 2);
  EXPECT_EQ(pol_upper_bound({12, 18, 24, 30}, 2, MultiDegree{3, 3}), 0);
  EXPECT_EQ(pol_upper_bound({2}, 2, MultiDegree{4, 0}), 1);
  EXPECT_EQ(pol_upper_bound({2}, 2, MultiDegree{1, 1}), 1);
  EXPECT_EQ(pol_upper_bound({2}, 3, MultiDegree{1, 1, 0}), 1);
  EXPECT_EQ(pol_upper_bound({}, 2, MultiDegree{1, 1}), 0);
  EXPECT_EQ(pol_upper_bound({1}, 2, MultiDegree{0, 0}), 1);
  EXPECT_THROW(pol_upper_bound({2}, 3, MultiDegree{1, 1}), std::invalid_argument);
}

TEST(ExactPolSpan, Examples) {
  auto det = explicit_table({P(kDet, 1, 4)}, "computed");
  EXPECT_EQ(exact_pol_span(det, 2, MultiDegree{1, 1}), 1u);
  EXPECT_EQ(exact_pol_span(det, 2, MultiDegree{2, 0}), 1u);
  auto q = explicit_table({P(kQ5, 1, 5)}, "computed");
  EXPECT_EQ(exact_pol_span(q, 2, MultiDegree{2, 2}), 2u);
  EXPECT_EQ(exact_pol_span(q, 2, MultiDegree{4, 0}), 1u);
  EXPECT_EQ(exact_pol_span(q, 3, MultiDegree{2, 2, 0}), 2u);
  EXPECT_EQ(exact_pol_span(q, 4, MultiDegree{1, 1, 1, 1}), 3u);
}

TEST(ExactPolSpan, NeverExceedsCountOrInvariants) {
  const std::vector<std::string> groups = {"sym(3)", "weyl(B,2)", "weyl(G,2)", "weyl(A,2)"};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::uniform_int_distribution<int> part(0, 3);
  std::map<std::string, GeneratorTable> tables;
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto& name = groups[pick(rng)];
    auto rep = resolve("finite(" + name + "): phi1");
    if (!tables.count(name)) tables.emplace(name, explicit_table(minimal_generators(rep.group(), 6), "computed"));
    const auto& table = tables.at(name);
    MultiDegree beta{part(rng), part(rng)};
    BigInt span = exact_pol_span(table, 2, beta);
    ASSERT_LE(span, pol_upper_bound(table.degrees, 2, beta)) << name << " " << beta.str();
    ASSERT_LE(span, molien_dim(rep.group(), beta)) << name << " " << beta.str();
    ++compared;
  }
  EXPECT_EQ(compared, 120);
}

// ---------------------------------------------------------------------------------
// The scan

TEST(Check, TwoBinaryVectorsFailAtOneOne) {
  auto rep = resolve("A1: R1 * 2");
  CheckOptions opt;
  opt.table = explicit_table({P(kDet, 1, 4)}, "computed");
  auto v = check_k_polarization(rep, 2, 4, opt);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.backend, "exact");
  EXPECT_EQ(*v.beta, (MultiDegree{1, 1}));
  EXPECT_EQ(*v.dim_invariants, 4);
  EXPECT_EQ(*v.pol_dim, 1);

  opt.backend = Backend::bound;
  auto b = check_k_polarization(rep, 2, 4, opt);
  ASSERT_TRUE(b.fails());
  EXPECT_EQ(b.backend, "dimension-bound");
  EXPECT_EQ(*b.beta, (MultiDegree{1, 1}));
}

TEST(Check, QuadraticFormHoldsForSmallK) {
  auto rep = resolve("B2: phi1");
  CheckOptions opt;
  opt.table = explicit_table({P(kQ5, 1, 5)}, "computed");
  auto v = check_k_polarization(rep, 2, 6, opt);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.degree_bound, 6);
  auto five = check_k_polarization(rep, 5, 5, opt);
  ASSERT_TRUE(five.fails());
  EXPECT_EQ(*five.beta, (MultiDegree{1, 1, 1, 1, 1}));
}

TEST(Check, DefiningModulesFailOnceDeterminantsAppear) {
  auto a3 = resolve("A3: phi1");
  EXPECT_TRUE(check_k_polarization(a3, 3, 5).holds());
  auto v = check_k_polarization(a3, 4, 4);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(*v.beta, (MultiDegree{1, 1, 1, 1}));
  require_k_monotone(check_k_polarization(a3, 3, 5), v);
}

TEST(Check, TorusAndFiniteGroups) {
  auto t = check_k_polarization(resolve("torus(1): [1,-1]"), 2, 4);
  ASSERT_TRUE(t.fails());
  EXPECT_EQ(*t.beta, (MultiDegree{1, 1}));
  EXPECT_EQ(*t.dim_invariants, 2);
  EXPECT_EQ(*t.pol_dim, 1);

  auto s3 = check_k_polarization(resolve("finite(sym(3)): phi1"), 2, 6);
  EXPECT_TRUE(s3.holds());
  EXPECT_EQ(s3.backend, "exact");
}

TEST(Check, WitnessIsInvariantAndOutsideTheSpan) {
  auto rep = resolve("finite(sym(2)): phi1 * 2");
  // sym(2) permuting two pairs of coordinates is not a reflection group on C^4.
  auto v = check_k_polarization(rep, 2, 4);
  ASSERT_TRUE(v.fails());
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(reynolds(rep.group(), *v.witness), *v.witness);
  auto gens = explicit_table(minimal_generators(rep.group(), 4), "computed");
  auto span = PolarizedProducts(gens, 2).span(*v.beta);
  EXPECT_FALSE(span.contains(*v.witness));
}

TEST(Check, IncompleteOrUnverifiedTablesAreInconclusive) {
  auto rep = resolve("A1: R2");
  CheckOptions opt;
  opt.backend = Backend::bound;
  opt.table = degrees_only({}, "external");
  auto v = check_k_polarization(rep, 2, 4, opt);
  EXPECT_EQ(v.status, Verdict::Status::inconclusive);
  EXPECT_NE(v.reason.find("incomplete"), std::string::npos);

  CheckOptions wrong;
  wrong.table = explicit_table({P("x[1][1]^2", 1, 3)}, "computed");
  auto w = check_k_polarization(rep, 2, 4, wrong);
  EXPECT_EQ(w.status, Verdict::Status::inconclusive);
  EXPECT_NE(w.reason.find("unverified"), std::string::npos);

  CheckOptions exact;
  exact.backend = Backend::exact;
  exact.table = degrees_only({2}, "external");
  EXPECT_EQ(check_k_polarization(rep, 2, 4, exact).status, Verdict::Status::inconclusive);

  // No explicit table and nonzero invariants: nothing to compare against.
  EXPECT_EQ(check_k_polarization(resolve("B2: phi1"), 2, 4).status, Verdict::Status::inconclusive);
}

TEST(Check, BoundBackendCertifiesDeficits) {
  auto rep = resolve("A1: R4");
  CheckOptions opt;
  opt.table = degrees_only({2, 3}, "external");
  auto v = check_k_polarization(rep, 2, 6, opt);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(*v.beta, (MultiDegree{2, 2}));
  EXPECT_EQ(*v.dim_invariants, 3);
  EXPECT_EQ(*v.pol_dim, 2);
}

TEST(Check, CertifyAtASingleMultidegree) {
  auto rep = resolve("A1: R4");
  CheckOptions opt;
  opt.table = degrees_only({2, 3}, "external");
  auto v = certify_at(rep, MultiDegree{2, 2}, opt);
  EXPECT_TRUE(v.fails());
  auto none = certify_at(rep, MultiDegree{1, 1}, opt);
  EXPECT_EQ(none.status, Verdict::Status::inconclusive);
  EXPECT_EQ(*none.dim_invariants, 1);
}

TEST(Check, ThreadsDoNotChangeTheVerdict) {
  auto rep = resolve("A1: R4");
  CheckOptions one, four;
  one.table = four.table = degrees_only({2, 3}, "external");
  four.threads = 4;
  auto a = check_k_polarization(rep, 3, 5, one), b = check_k_polarization(rep, 3, 5, four);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.beta, b.beta);
  EXPECT_EQ(a.dim_invariants, b.dim_invariants);
}

TEST(Check, ArgumentErrors) {
  auto rep = resolve("A1: R2");
  EXPECT_THROW(check_k_polarization(rep, 0, 4), std::invalid_argument);
  EXPECT_THROW(check_k_polarization(rep, 2, 0), std::invalid_argument);
  EXPECT_THROW(parse_backend("fast"), std::invalid_argument);
}

// ---------------------------------------------------------------------------------
// Ledger and criteria

TEST(Ledger, SingleGrading) {
  auto rows = generator_ledger(resolve("A3: [3,0,0]"), 8);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& row : rows) {
    if (row.beta.total() < 8) {
      EXPECT_EQ(row.dim, 0) << row.beta.str();
      EXPECT_EQ(row.generators_lower_bound, 0);
    }
  }
  EXPECT_EQ(rows.back().dim, 1);
  EXPECT_EQ(rows.back().generators_lower_bound, 1);

  auto r4 = generator_ledger(resolve("A1: R4"), 6);
  EXPECT_EQ(r4[1].generators_lower_bound, 1);  // degree 2
  EXPECT_EQ(r4[2].generators_lower_bound, 1);  // degree 3
  EXPECT_EQ(r4[3].generators_lower_bound, 0);  // degree 4: only the square of the quadric
}

TEST(Ledger, Bigraded) {
  auto t = resolve("torus(1): [1]");
  auto u = resolve("torus(1): [-1]");
  auto rows = generator_ledger(t.character(), u.character(), 3);
  for (const auto& row : rows)
    if (row.beta == MultiDegree{1, 1}) EXPECT_EQ(row.generators_lower_bound, 1);

  auto b2 = resolve("B2: phi1").character();
  for (const auto& row : generator_ledger(b2, b2, 4)) {
    if (row.beta == MultiDegree{1, 1}) EXPECT_EQ(row.generators_lower_bound, 1);
    if (row.beta == MultiDegree{2, 2}) EXPECT_EQ(row.generators_lower_bound, 0);
  }
}

TEST(QuickCriteria, FiredSets) {
  using S = std::set<std::string>;
  EXPECT_EQ(fired_names(resolve("A1: R3")), (S{criteria::kOddSl2}));
  EXPECT_EQ(fired_names(resolve("torus(1): [1,-1,2,-2]")), (S{criteria::kBalancedTorus}));
  EXPECT_EQ(fired_names(resolve("A1: R6")), (S{criteria::kRankOne}));
  EXPECT_EQ(fired_names(resolve("A1: R4")), S{});
  EXPECT_EQ(fired_names(resolve("torus(1): [1,-1]")), S{});
  EXPECT_EQ(fired_names(resolve("C3: phi3"), 5), (S{criteria::kSymplectic}));
  EXPECT_EQ(fired_names(resolve("A5: phi3"), 5), (S{criteria::kSymplectic}));
  EXPECT_EQ(fired_names(resolve("B2: phi1")), S{});
  EXPECT_EQ(fired_names(resolve("F4: phi4"), 4, CatalogFacts{std::vector<int>{2, 3}, 8, std::nullopt}),
            (S{criteria::kGeneratorCount}));
  EXPECT_EQ(fired_names(resolve("C3: phi2"), 4, CatalogFacts{std::vector<int>{2, 3}, 7, false}),
            (S{criteria::kGeneratorCount}));
  EXPECT_EQ(fired_names(resolve("C3: phi2"), 4, CatalogFacts{std::vector<int>{2, 3}, 7, true}), S{});
}

TEST(QuickCriteria, BihomogeneousGenerator) {
  auto names = fired_names(resolve("A1: R1 + R2"), 4);
  EXPECT_TRUE(names.count(criteria::kBihomogeneous));
  auto none = fired_names(resolve("A2: phi1 + phi2"), 4);
  EXPECT_FALSE(none.count(criteria::kBihomogeneous));
}

TEST(QuickCriteria, AgreeWithTheScan) {
  // Every fired criterion predicts a deficit for k = 2.
  for (const char* text : {"A1: R3", "torus(1): [1,-1,2,-2]", "A1: R6"}) {
    auto rep = resolve(text);
    ASSERT_FALSE(fired(quick_criteria(rep)).empty()) << text;
    CheckOptions opt;
    opt.backend = Backend::bound;
    std::vector<int> degrees;
    for (const auto& row : generator_ledger(rep, 8))
      for (BigInt i = 0; i < row.generators_lower_bound; ++i) degrees.push_back(row.beta.total());
    opt.table = degrees_only(degrees, "computed");
    auto v = check_k_polarization(rep, 2, 8, opt);
    EXPECT_TRUE(v.fails()) << text << " " << v.reason;
  }
}

// ---------------------------------------------------------------------------------
// Consistency faults

TEST(Consistency, SubmoduleAndMonotonicity) {
  Verdict fails;
  fails.status = Verdict::Status::fails_at;
  fails.beta = MultiDegree{1, 1};
  Verdict holds;
  holds.status = Verdict::Status::holds_up_to;
  holds.degree_bound = 4;
  EXPECT_THROW(require_submodule_consistency(fails, holds), ConsistencyFault);
  EXPECT_THROW(require_k_monotone(fails, holds), ConsistencyFault);
  holds.degree_bound = 1;
  EXPECT_NO_THROW(require_submodule_consistency(fails, holds));
  EXPECT_NO_THROW(require_k_monotone(holds, fails));
}
