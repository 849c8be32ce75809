#ifndef POLARIS_PROPERTIES_HPP
#define POLARIS_PROPERTIES_HPP

// Randomized property suites, each comparing a fast routine against an independent
// oracle over many seeded instances. Used by the unit tests and the verification suite.

#include "polaris/character.hpp"
#include "polaris/fingrp.hpp"
#include "polaris/oracle.hpp"
#include "polaris/polynomial.hpp"
#include "polaris/span.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace polaris::props {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
};

// ---------------------------------------------------------------------------------
// Random inputs

/// Genuine characters with at most max_dim basis weights: torus weight lists and small
/// irreducibles of A1, A2 and B2.
inline FormalCharacter random_character(std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> rank(1, 2), n(1, max_dim), c(-3, 3);
      const int r = rank(rng);
      FormalCharacter chi = FormalCharacter::torus(r);
      const int count = n(rng);
      for (int i = 0; i < count; ++i) {
        Weight w(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) w.set(j, c(rng));
        chi.add(w, 1);
      }
      return chi;
    }
    case 1: {
      std::uniform_int_distribution<int> j(0, std::min(max_dim - 1, 7));
      return irrep_character(RootSystem::get('A', 1), Weight{j(rng)});
    }
    case 2: {
      const std::vector<Weight> small = {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}};
      std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
      auto chi = irrep_character(RootSystem::get('A', 2), small[pick(rng)]);
      if (chi.dimension() > max_dim) return irrep_character(RootSystem::get('A', 2), Weight{1, 0});
      return chi;
    }
    default: {
      const std::vector<Weight> small = {Weight{1, 0}, Weight{0, 1}};
      std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
      return irrep_character(RootSystem::get('B', 2), small[pick(rng)]);
    }
  }
}

/// Nonzero homogeneous polynomial on one block of `coords` variables.
inline Polynomial random_homogeneous(std::mt19937_64& rng, int coords, int degree, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms), var(0, coords - 1);
  Polynomial p(1, coords);
  while (p.is_zero()) {
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      Monomial m(static_cast<std::size_t>(coords), 0);
      for (int e = 0; e < degree; ++e) ++m[static_cast<std::size_t>(var(rng))];
      p.add_term(m, random_rational(rng));
    }
  }
  return p;
}

inline Matrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    Matrix g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = random_rational(rng, 4);
    if (g.determinant() != 0) return g;
  }
}

namespace detail {

/// Runs `instance` n times; an instance returns an empty string on success.
inline SuiteResult run(const std::string& name, int n, const std::function<std::string(int)>& instance) {
  SuiteResult r{name, 0, 0, ""};
  for (int i = 0; i < n; ++i) {
    std::string failure;
    try {
      failure = instance(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.instances;
    if (!failure.empty()) {
      if (r.failures++ == 0) r.first_failure = failure;
    }
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------------
// Suites

inline SuiteResult restitution_identity(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coords(1, 3), d(0, 4), k(1, 3);
  return detail::run("restitution identity", n, [&](int i) -> std::string {
    auto f = random_homogeneous(rng, coords(rng), d(rng));
    auto report = restitute(polarize(f, k(rng)), f, 2, static_cast<std::uint64_t>(i));
    return report.ok ? "" : f.str() + ": " + report.failures.front();
  });
}

inline SuiteResult coalgebra_law(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coords(1, 3), d(0, 3), k(1, 3);
  return detail::run("coalgebra law", n, [&](int) -> std::string {
    const int c = coords(rng);
    auto f = random_homogeneous(rng, c, d(rng), 3);
    auto g = random_homogeneous(rng, c, d(rng), 3);
    auto report = coalgebra_check(f, g, k(rng));
    return report.ok ? "" : f.str() + " / " + g.str() + ": " + report.failures.front();
  });
}

/// A single polarization component f -> f_alpha is injective on each degree, so it
/// preserves the dimension of any span.
inline SuiteResult polarization_injectivity(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coords(1, 3), d(1, 4), k(1, 3), count(1, 5);
  return detail::run("polarization injectivity", n, [&](int) -> std::string {
    const int c = coords(rng), degree = d(rng), copies = k(rng);
    std::vector<Polynomial> fs;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) fs.push_back(random_homogeneous(rng, c, degree, 4));
    const auto subspace = oracle::rank_over_monomials(fs);
    auto alphas = multidegrees_of_total(copies, degree);
    std::uniform_int_distribution<std::size_t> pick(0, alphas.size() - 1);
    const MultiDegree alpha = alphas[pick(rng)];
    std::vector<Polynomial> pieces;
    for (const auto& f : fs) pieces.push_back(polarize(f, copies).at(alpha));
    if (span_dimension(pieces, alpha) != subspace || oracle::rank_over_monomials(pieces) != subspace)
      return "rank drops at " + alpha.str();
    return "";
  });
}

/// Molien coefficient against the span of Reynolds images of all monomials.
inline SuiteResult molien_reynolds(std::uint64_t seed, int n = 100) {
  const std::vector<FiniteGroup> groups = {symmetric_group(3), weyl_group('B', 2), weyl_group('A', 2),
                                           weyl_group('G', 2), symmetric_group(2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::uniform_int_distribution<int> k(1, 2), part(0, 3);
  return detail::run("Molien vs Reynolds span", n, [&](int) -> std::string {
    const auto& g = groups[pick(rng)];
    std::vector<int> parts(static_cast<std::size_t>(k(rng)));
    for (auto& p : parts) p = part(rng);
    const MultiDegree beta(parts);
    std::vector<Polynomial> images;
    for (const auto& m : monomials_of(g.dimension(), beta)) {
      Polynomial mono(static_cast<int>(beta.size()), g.dimension());
      mono.add_term(m, 1);
      images.push_back(reynolds(g, mono));
    }
    const BigInt span(oracle::rank_over_monomials(images));
    const BigInt molien = molien_dim(g, beta);
    if (span != molien) return g.name() + " " + beta.str() + ": Molien " + molien.str() + ", span " + span.str();
    return "";
  });
}

/// Newton/Adams symmetric powers against enumeration of monomials in the weight basis.
inline SuiteResult newton_plethysm(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  return detail::run("Newton vs monomial plethysm", n, [&](int) -> std::string {
    auto chi = random_character(rng, 12);
    for (int d = 0; d <= 5; ++d)
      if (!(sym_power(chi, d) == oracle::sym_power_by_monomials(chi, d)))
        return chi.tag_name() + " degree " + std::to_string(d);
    return "";
  });
}

/// Weyl alternation against repeated highest-weight peeling.
inline SuiteResult alternation_decompose(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> op(0, 2), deg(1, 3);
  int trial = 0;
  return detail::run("Weyl alternation vs decomposition", n, [&](int) -> std::string {
    auto a = random_character(rng, 8);
    if (a.is_torus()) a = irrep_character(RootSystem::get('A', 1), Weight{trial % 5});
    ++trial;
    FormalCharacter chi = a;
    switch (op(rng)) {
      case 0: chi = sym_power(a, deg(rng)); break;
      case 1: chi = tensor(a, dualize(a)); break;
      default: chi = tensor(ext_power(a, 2), a); break;
    }
    auto parts = decompose(chi);
    auto alt = polaris::detail::alternation(chi);
    BigInt zero_part = 0;
    for (const auto& [lambda, m] : parts)
      if (lambda.is_zero()) zero_part = m;
    if (trivial_multiplicity(chi) != zero_part) return chi.tag_name() + ": trivial multiplicity";
    if (alt.size() != parts.size()) return chi.tag_name() + ": component count";
    for (const auto& [lambda, m] : parts)
      if (!alt.count(lambda) || alt.at(lambda) != m) return chi.tag_name() + ": multiplicity of " + lambda.str();
    return "";
  });
}

/// Rank-one torus invariant dimensions against direct lattice-point counting.
inline SuiteResult torus_lattice(std::uint64_t seed, int n = 120) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, 4), c(-3, 3), part(0, 3), k(1, 3);
  return detail::run("torus lattice points", n, [&](int) -> std::string {
    std::vector<Weight> weights;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) weights.push_back(Weight{c(rng)});
    auto v = torus_character(1, weights);
    std::vector<int> parts(static_cast<std::size_t>(k(rng)));
    for (auto& p : parts) p = part(rng);
    BigInt fast = multidegree_invariant_dim(v, MultiDegree(parts));
    BigInt slow = oracle::torus_lattice_points(weights, parts);
    if (fast != slow) return MultiDegree(parts).str() + ": " + fast.str() + " vs " + slow.str();
    return "";
  });
}

/// All suites with fixed seeds.
inline std::vector<SuiteResult> all_suites(int n = 120) {
  return {restitution_identity(21, n), coalgebra_law(22, n), polarization_injectivity(23, n),
          molien_reynolds(31, n),      newton_plethysm(11, n), alternation_decompose(13, n),
          torus_lattice(15, n)};
}

}  // namespace polaris::props

#endif  // POLARIS_PROPERTIES_HPP
