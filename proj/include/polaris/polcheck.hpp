#ifndef POLARIS_POLCHECK_HPP
#define POLARIS_POLCHECK_HPP

// Certifying failure of the k-polarization property, or verifying it up to a degree
// bound, by comparing invariant dimensions of kV against the subalgebra generated by
// polarized generators of C[V]^G.

#include "polaris/character.hpp"
#include "polaris/fingrp.hpp"
#include "polaris/polynomial.hpp"
#include "polaris/repspec.hpp"
#include "polaris/span.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace polaris {

// ---------------------------------------------------------------------------------
// Generator tables and verdicts

struct GeneratorTable {
  std::vector<int> degrees;               // ascending, with multiplicity
  std::vector<Polynomial> polynomials;    // parallel to degrees when explicit
  std::vector<std::string> provenance;    // per entry: published | external | computed
  bool has_explicit = false;              // polynomials are present (vacuously true for an empty table)
  bool sorted() const { return std::is_sorted(degrees.begin(), degrees.end()); }
};

inline GeneratorTable degrees_only(std::vector<int> degrees, const std::string& provenance) {
  std::sort(degrees.begin(), degrees.end());
  GeneratorTable t;
  t.provenance.assign(degrees.size(), provenance);
  t.degrees = std::move(degrees);
  return t;
}

inline GeneratorTable explicit_table(std::vector<Polynomial> polys, const std::string& provenance) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.homogeneous_degree().value_or(0) < b.homogeneous_degree().value_or(0);
  });
  GeneratorTable t;
  for (const auto& p : polys) {
    auto d = p.homogeneous_degree();
    if (!d || *d < 1) throw std::invalid_argument("generator is not homogeneous of positive degree: " + p.str());
    t.degrees.push_back(*d);
  }
  t.polynomials = std::move(polys);
  t.provenance.assign(t.degrees.size(), provenance);
  t.has_explicit = true;
  return t;
}

struct CriterionResult {
  enum class Status { fired, not_fired, not_evaluable };
  std::string name;
  std::string citation;
  Status status = Status::not_evaluable;
  std::string detail;
};

inline const char* status_name(CriterionResult::Status s) {
  switch (s) {
    case CriterionResult::Status::fired: return "fired";
    case CriterionResult::Status::not_fired: return "not_fired";
    default: return "not_evaluable";
  }
}

struct Verdict {
  enum class Status { holds_up_to, fails_at, inconclusive };
  Status status = Status::inconclusive;
  std::string backend;  // exact | dimension-bound | criterion(<name>)
  int degree_bound = -1;
  std::optional<MultiDegree> beta;
  std::optional<BigInt> dim_invariants;
  std::optional<BigInt> pol_dim;
  std::optional<Polynomial> witness;
  std::string reason;
  std::vector<CriterionResult> criteria;  // fired criteria only

  bool fails() const { return status == Status::fails_at; }
  bool holds() const { return status == Status::holds_up_to; }
};

inline const char* status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::holds_up_to: return "holds_up_to";
    case Verdict::Status::fails_at: return "fails_at";
    default: return "inconclusive";
  }
}

enum class Backend { automatic, exact, bound };

inline Backend parse_backend(const std::string& s) {
  if (s == "auto") return Backend::automatic;
  if (s == "exact") return Backend::exact;
  if (s == "bound") return Backend::bound;
  throw std::invalid_argument("unknown backend '" + s + "' (auto, exact, bound)");
}

// ---------------------------------------------------------------------------------
// Invariant dimensions of kV

class InvariantDims {
 public:
  InvariantDims(const Representation& rep, int k) : rep_(rep), k_(k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (rep.is_connected()) blocks_.emplace(std::vector<FormalCharacter>(static_cast<std::size_t>(k), rep.character()));
  }

  int k() const { return k_; }

  /// Extends the cached symmetric powers through degree d so that later dim() calls only read.
  void prepare(int d) {
    if (blocks_)
      for (int e = 0; e <= d; ++e) blocks_->sym(0, e);
  }

  BigInt dim(const MultiDegree& beta) {
    if (static_cast<int>(beta.size()) != k_) throw std::invalid_argument("multidegree has wrong length");
    if (rep_.is_finite()) return molien_dim(rep_.group(), beta);
    return blocks_->dim(beta);
  }

  /// Dimensions for a batch of multidegrees, split across threads; results in input order.
  std::vector<BigInt> dims(const std::vector<MultiDegree>& betas, int threads) {
    int max_total = 0;
    for (const auto& b : betas) max_total = std::max(max_total, b.total());
    prepare(max_total);
    std::vector<BigInt> out(betas.size());
    if (threads <= 1 || betas.size() < 2) {
      for (std::size_t i = 0; i < betas.size(); ++i) out[i] = dim(betas[i]);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < betas.size();) {
        try {
          out[i] = dim(betas[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
  }

 private:
  const Representation& rep_;
  int k_;
  std::optional<BlockInvariants> blocks_;
};

// ---------------------------------------------------------------------------------
// Polarized-generator counts and spans

/// N(beta): multisets of (generator, alpha) with alpha nonzero, |alpha| = deg, summing to
/// beta. Equals the coefficient of x^beta in prod_j prod_{|alpha| = m_j} 1/(1 - x^alpha).
inline BigInt pol_upper_bound(const std::vector<int>& degrees, int k, const MultiDegree& beta) {
  if (static_cast<int>(beta.size()) != k) throw std::invalid_argument("multidegree has wrong length");
  // Mixed-radix index over the box 0 <= gamma <= beta.
  std::vector<std::size_t> stride(static_cast<std::size_t>(k));
  std::size_t cells = 1;
  for (int i = k - 1; i >= 0; --i) {
    stride[static_cast<std::size_t>(i)] = cells;
    cells *= static_cast<std::size_t>(beta[static_cast<std::size_t>(i)] + 1);
  }
  std::vector<BigInt> c(cells, 0);
  c[0] = 1;
  for (int m : degrees) {
    if (m > beta.total()) continue;
    for (const auto& alpha : multidegrees_of_total(k, m)) {
      if (!alpha.dominated_by(beta)) continue;
      std::size_t shift = 0;
      for (int i = 0; i < k; ++i) shift += static_cast<std::size_t>(alpha[static_cast<std::size_t>(i)]) * stride[static_cast<std::size_t>(i)];
      // Unbounded knapsack: ascending cell order lets each item be reused.
      for (std::size_t cell = 0; cell < cells; ++cell) {
        std::size_t rest = cell;
        bool fits = true;
        for (int i = 0; i < k; ++i) {
          int g = static_cast<int>(rest / stride[static_cast<std::size_t>(i)]);
          rest %= stride[static_cast<std::size_t>(i)];
          if (g < alpha[static_cast<std::size_t>(i)]) fits = false;
        }
        if (fits && c[cell - shift] != 0) c[cell] += c[cell - shift];
      }
    }
  }
  return c[cells - 1];
}

/// Products of polarized explicit generators that land in multidegree beta.
class PolarizedProducts {
 public:
  PolarizedProducts(const GeneratorTable& table, int k) : k_(k) {
    if (!table.has_explicit) throw std::invalid_argument("exact span needs explicit generators");
    for (const auto& f : table.polynomials) pieces_.push_back(polarize(f, k));
    coords_ = table.polynomials.empty() ? 0 : table.polynomials.front().coords();
  }

  /// Span of all products in multidegree beta. Stops early once the rank reaches stop_at.
  EchelonBasis span(const MultiDegree& beta, std::optional<std::size_t> stop_at = std::nullopt) const {
    EchelonBasis basis;
    if (pieces_.empty()) return basis;
    struct Item {
      const MultiDegree* alpha;
      const Polynomial* poly;
    };
    std::vector<Item> items;
    for (const auto& pol : pieces_)
      for (const auto& [alpha, poly] : pol)
        if (alpha.dominated_by(beta) && !alpha.is_zero()) items.push_back({&alpha, &poly});
    std::vector<int> left(beta.parts);
    bool done = false;
    auto rec = [&](auto&& self, std::size_t start, const Polynomial& acc) -> void {
      if (done) return;
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
        basis.insert(acc);
        if (stop_at && basis.rank() >= *stop_at) done = true;
        return;
      }
      for (std::size_t i = start; i < items.size() && !done; ++i) {
        const auto& a = *items[i].alpha;
        bool fits = true;
        for (int c = 0; c < k_; ++c)
          if (a[static_cast<std::size_t>(c)] > left[static_cast<std::size_t>(c)]) fits = false;
        if (!fits) continue;
        for (int c = 0; c < k_; ++c) left[static_cast<std::size_t>(c)] -= a[static_cast<std::size_t>(c)];
        self(self, i, acc * *items[i].poly);
        for (int c = 0; c < k_; ++c) left[static_cast<std::size_t>(c)] += a[static_cast<std::size_t>(c)];
      }
    };
    if (beta.is_zero()) {
      basis.insert(Polynomial::constant(k_, coords_, 1));
      return basis;
    }
    rec(rec, 0, Polynomial::constant(k_, coords_, 1));
    return basis;
  }

 private:
  int k_;
  int coords_ = 0;
  std::vector<Polarization> pieces_;
};

inline std::size_t exact_pol_span(const GeneratorTable& table, int k, const MultiDegree& beta) {
  return PolarizedProducts(table, k).span(beta).rank();
}

// ---------------------------------------------------------------------------------
// Automatic generator tables and verification

/// Indecomposable invariant monomials of a torus module, through degree max_degree.
inline std::vector<Polynomial> torus_generators(const Representation& rep, int max_degree) {
  const int n = rep.dimension();
  std::vector<Weight> weights;
  for (const auto& s : rep.summands()) weights.push_back(s.highest);
  std::vector<Monomial> invariants;
  std::vector<Polynomial> gens;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& e : multidegrees_of_total(n, d)) {
      Weight sum(static_cast<std::size_t>(rep.spec().rank));
      for (int i = 0; i < n; ++i) sum = sum + e[static_cast<std::size_t>(i)] * weights[static_cast<std::size_t>(i)];
      if (!sum.is_zero()) continue;
      bool decomposable = std::any_of(invariants.begin(), invariants.end(), [&](const Monomial& m) {
        for (int i = 0; i < n; ++i)
          if (m[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)]) return false;
        return true;
      });
      invariants.push_back(e.parts);
      if (decomposable) continue;
      Polynomial p(1, n);
      p.add_term(e.parts, 1);
      gens.push_back(std::move(p));
    }
  }
  return gens;
}

/// A complete table of minimal generators through degree max_degree when one can be
/// computed: finite groups, tori, and connected groups without invariants up to that degree.
inline std::optional<GeneratorTable> automatic_generators(const Representation& rep, int max_degree) {
  if (rep.is_finite()) return explicit_table(minimal_generators(rep.group(), max_degree), "computed");
  if (rep.is_torus()) return explicit_table(torus_generators(rep, max_degree), "computed");
  for (int d = 1; d <= max_degree; ++d)
    if (invariant_dim(rep.character(), d) != 0) return std::nullopt;
  return explicit_table({}, "computed");
}

/// Checks that explicit generators have the right shape and are invariant. Returns an
/// empty string on success, else the reason.
inline std::string verify_generators(const Representation& rep, const GeneratorTable& table, int samples = 20,
                                     std::uint64_t seed = 7) {
  if (!table.has_explicit) return "no explicit generators";
  for (const auto& p : table.polynomials)
    if (p.blocks() != 1 || p.coords() != rep.dimension())
      return "generator " + p.str() + " is not a polynomial on V (dimension " + std::to_string(rep.dimension()) + ")";
  if (rep.is_finite()) {
    for (const auto& p : table.polynomials)
      if (!(reynolds(rep.group(), p) == p)) return "generator " + p.str() + " is not Reynolds-fixed";
    return "";
  }
  if (table.polynomials.empty()) return "";
  auto sample = rep.sampler();
  if (!sample) return "no matrix realization available to verify invariance";
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Matrix g = (*sample)(rng);
    for (const auto& p : table.polynomials)
      if (!(p.substitute(g) == p)) return "generator " + p.str() + " is not invariant under a sampled group element";
  }
  return "";
}

// ---------------------------------------------------------------------------------
// The scan

struct CheckOptions {
  Backend backend = Backend::automatic;
  int threads = 1;
  std::optional<GeneratorTable> table;  // supplied (e.g. from the catalog); else computed when possible
};

namespace detail {

inline Verdict inconclusive(const std::string& backend, std::string reason) {
  Verdict v;
  v.status = Verdict::Status::inconclusive;
  v.backend = backend;
  v.reason = std::move(reason);
  return v;
}

struct ResolvedBackend {
  Backend backend;
  GeneratorTable table;
  std::string problem;  // nonempty: no usable table
};

inline ResolvedBackend resolve_backend(const Representation& rep, int max_degree, const CheckOptions& opt) {
  std::optional<GeneratorTable> table = opt.table;
  if (!table) table = automatic_generators(rep, max_degree);
  if (!table) return {opt.backend, {}, "no generator table available"};
  Backend b = opt.backend;
  if (b == Backend::automatic) b = table->has_explicit ? Backend::exact : Backend::bound;
  if (b == Backend::exact) {
    if (!table->has_explicit) return {b, *table, "no explicit generators for the exact backend"};
    std::string problem = verify_generators(rep, *table);
    if (!problem.empty()) return {b, *table, "generators unverified: " + problem};
  }
  return {b, *table, ""};
}

inline const char* backend_name(Backend b) { return b == Backend::exact ? "exact" : "dimension-bound"; }

}  // namespace detail

/// Compares dim C[kV]^G_beta against the polarized-generator count (bound backend) or the
/// exact span of polarized products (exact backend) at every beta with 0 < |beta| <= D,
/// in order of total degree then ascending lex. Stops at the first deficit.
inline Verdict check_k_polarization(const Representation& rep, int k, int max_degree, const CheckOptions& opt = {}) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  auto resolved = detail::resolve_backend(rep, max_degree, opt);
  const char* name = detail::backend_name(resolved.backend);
  if (!resolved.problem.empty()) return detail::inconclusive(name, resolved.problem);

  InvariantDims dims(rep, k);
  std::optional<PolarizedProducts> products;
  if (resolved.backend == Backend::exact) products.emplace(resolved.table, k);

  for (int d = 1; d <= max_degree; ++d) {
    auto betas = multidegrees_of_total(k, d);
    auto dim = dims.dims(betas, opt.threads);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      const MultiDegree& beta = betas[i];
      if (dim[i] == 0) continue;
      BigInt pol;
      std::optional<EchelonBasis> span;
      if (resolved.backend == Backend::exact) {
        // The span sits inside the invariants, so reaching dim settles the comparison.
        span = products->span(beta, static_cast<std::size_t>(dim[i]));
        pol = span->rank();
      } else {
        pol = pol_upper_bound(resolved.table.degrees, k, beta);
      }
      if (resolved.backend == Backend::exact && pol > dim[i])
        throw ConsistencyFault("polarized span exceeds the invariant dimension at " + beta.str());
      if (pol >= dim[i]) continue;
      if (beta.support() == 1)
        return detail::inconclusive(name, "generator table incomplete in degree " + std::to_string(d) + " (dim " +
                                              dim[i].str() + ", generated " + pol.str() + ")");
      Verdict v;
      v.status = Verdict::Status::fails_at;
      v.backend = name;
      v.beta = beta;
      v.dim_invariants = dim[i];
      v.pol_dim = pol;
      if (rep.is_finite() && span) {
        for (const auto& b : invariant_basis(rep.group(), beta))
          if (!span->contains(b)) {
            v.witness = b;
            break;
          }
        if (!v.witness) throw ConsistencyFault("deficit at " + beta.str() + " without a witness");
      }
      return v;
    }
  }
  if (resolved.backend == Backend::exact) {
    Verdict v;
    v.status = Verdict::Status::holds_up_to;
    v.backend = name;
    v.degree_bound = max_degree;
    return v;
  }
  auto v = detail::inconclusive(name, "bound met; no exact span available");
  v.degree_bound = max_degree;
  return v;
}

/// Evaluates a single multidegree: fails_at when the count/span falls short there.
inline Verdict certify_at(const Representation& rep, const MultiDegree& beta, const CheckOptions& opt = {}) {
  const int k = static_cast<int>(beta.size());
  auto resolved = detail::resolve_backend(rep, beta.total(), opt);
  const char* name = detail::backend_name(resolved.backend);
  if (!resolved.problem.empty()) return detail::inconclusive(name, resolved.problem);
  InvariantDims dims(rep, k);
  BigInt dim = dims.dim(beta);
  BigInt pol = resolved.backend == Backend::exact ? BigInt(exact_pol_span(resolved.table, k, beta))
                                                  : pol_upper_bound(resolved.table.degrees, k, beta);
  Verdict v;
  v.backend = name;
  v.beta = beta;
  v.dim_invariants = dim;
  v.pol_dim = pol;
  if (pol < dim) {
    v.status = beta.support() == 1 ? Verdict::Status::inconclusive : Verdict::Status::fails_at;
    if (beta.support() == 1) v.reason = "generator table incomplete in degree " + std::to_string(beta.total());
  } else {
    v.status = Verdict::Status::inconclusive;
    v.reason = "no deficit at " + beta.str();
  }
  return v;
}

// ---------------------------------------------------------------------------------
// Generator ledger

struct LedgerRow {
  MultiDegree beta;
  BigInt dim;
  BigInt generators_lower_bound;
};

namespace detail {

inline std::vector<LedgerRow> ledger_from(const std::map<MultiDegree, BigInt>& dims) {
  std::vector<LedgerRow> rows;
  for (const auto& [beta, dim] : dims) {
    if (beta.is_zero()) continue;
    BigInt decomposable = 0;
    for (const auto& [b1, d1] : dims) {
      if (b1.is_zero() || !b1.dominated_by(beta) || b1 == beta) continue;
      std::vector<int> rest(beta.parts);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= b1[i];
      MultiDegree b2(rest);
      if (b2 < b1) continue;  // each unordered pair once
      BigInt d2 = dims.at(b2);
      decomposable += b1 == b2 ? BigInt(d1 * (d1 + 1) / 2) : BigInt(d1 * d2);
    }
    BigInt lb = dim - decomposable;
    rows.push_back({beta, dim, lb > 0 ? lb : BigInt(0)});
  }
  std::sort(rows.begin(), rows.end(), [](const LedgerRow& a, const LedgerRow& b) {
    return a.beta.total() != b.beta.total() ? a.beta.total() < b.beta.total() : a.beta < b.beta;
  });
  return rows;
}

}  // namespace detail

/// d -> (I(d), lower bound on minimal generators in degree d).
inline std::vector<LedgerRow> generator_ledger(const Representation& rep, int max_degree) {
  InvariantDims dims(rep, 1);
  std::map<MultiDegree, BigInt> table;
  for (int d = 0; d <= max_degree; ++d) table[MultiDegree{d}] = dims.dim(MultiDegree{d});
  return detail::ledger_from(table);
}

/// Bigraded by a split V = V1 + V2 into two blocks of summands (connected groups).
inline std::vector<LedgerRow> generator_ledger(const FormalCharacter& v1, const FormalCharacter& v2, int max_degree) {
  BlockInvariants inv({v1, v2});
  std::map<MultiDegree, BigInt> table;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& beta : multidegrees_of_total(2, d)) table[beta] = inv.dim(beta);
  return detail::ledger_from(table);
}

// ---------------------------------------------------------------------------------
// Quick criteria

/// Data that cannot be computed here and comes from the catalog.
struct CatalogFacts {
  std::optional<std::vector<int>> degrees;  // minimal generator degrees of C[V]^G
  std::optional<int> krull_dim_2v;          // Krull dimension of C[2V]^G
  std::optional<bool> coregular_2v;         // whether C[2V]^G is a polynomial ring
};

namespace criteria {

inline const char* kOddSl2 = "odd-sl2-summand";
inline const char* kBalancedTorus = "balanced-torus";
inline const char* kRankOne = "rank-one-q3";
inline const char* kSymplectic = "symplectic-summand";
inline const char* kBihomogeneous = "bihomogeneous-generator";
inline const char* kGeneratorCount = "generator-count";

}  // namespace criteria

/// q(V): half the number of nonzero weights counted with multiplicity.
inline BigInt q_value(const FormalCharacter& chi) {
  BigInt nonzero = 0;
  for (const auto& [w, m] : chi.terms())
    if (!w.is_zero()) nonzero += m;
  return nonzero / 2;
}

inline bool is_balanced(const FormalCharacter& chi) {
  for (const auto& [w, m] : chi.terms())
    if (chi.multiplicity(-w) != m) return false;
  return true;
}

/// Evaluates the failure criteria for the 2-polarization property (hence for every k >= 2).
inline std::vector<CriterionResult> quick_criteria(const Representation& rep, int max_degree = 8,
                                                   const CatalogFacts& facts = {}) {
  using S = CriterionResult::Status;
  std::vector<CriterionResult> out;
  const bool simple = rep.is_simple();
  const bool a1 = simple && rep.spec().type == 'A' && rep.spec().rank == 1;

  {
    CriterionResult c{criteria::kOddSl2, "SL2 module containing R_j with j odd", S::not_evaluable, ""};
    if (a1) {
      c.status = S::not_fired;
      for (const auto& s : rep.summands())
        if (s.highest[0] % 2 == 1) {
          c.status = S::fired;
          c.detail = "summand R" + std::to_string(s.highest[0]);
          break;
        }
    } else {
      c.detail = "needs G = SL2";
    }
    out.push_back(c);
  }
  {
    CriterionResult c{criteria::kBalancedTorus, "balanced C*-module with q(V) >= 2", S::not_evaluable, ""};
    if (rep.is_torus() && rep.spec().rank == 1) {
      const auto& chi = rep.character();
      BigInt q = q_value(chi);
      bool balanced = is_balanced(chi);
      c.status = balanced && q >= 2 ? S::fired : S::not_fired;
      c.detail = std::string(balanced ? "balanced" : "not balanced") + ", q = " + q.str();
    } else {
      c.detail = "needs G = C*";
    }
    out.push_back(c);
  }
  {
    CriterionResult c{criteria::kRankOne, "simple group of rank 1 with q(V) >= 3", S::not_evaluable, ""};
    if (a1) {
      BigInt q = q_value(rep.character());
      c.status = q >= 3 ? S::fired : S::not_fired;
      c.detail = "q = " + q.str();
    } else {
      c.detail = "needs a simple group of rank 1";
    }
    out.push_back(c);
  }
  {
    CriterionResult c{criteria::kSymplectic,
                      "irreducible symplectic summand whose invariants have even degrees", S::not_evaluable, ""};
    if (simple && rep.root_system()->rank() >= 2) {
      c.status = S::not_fired;
      for (const auto& [hw, copies] : rep.isotypic()) {
        if (hw.is_zero()) continue;
        auto chi = irrep_character(rep.root_system(), hw);
        if (frobenius_indicator(chi) != -1) continue;
        bool even = true;
        for (int d = 1; d <= max_degree && even; d += 2)
          if (invariant_dim(chi, d) != 0) even = false;
        if (even) {
          c.status = S::fired;
          c.detail = "symplectic summand with highest weight " + hw.str() + "; no odd-degree invariants through degree " +
                     std::to_string(max_degree);
          break;
        }
      }
    } else {
      c.detail = simple ? "rank 1 is covered by the SL2 criterion" : "needs a simple group";
    }
    out.push_back(c);
  }
  {
    CriterionResult c{criteria::kBihomogeneous, "minimal bihomogeneous generator of degree (a,b) with ab >= 2",
                      S::not_evaluable, ""};
    auto iso = rep.isotypic();
    bool nontrivial = std::none_of(iso.begin(), iso.end(), [](const auto& p) { return p.first.is_zero(); });
    if (rep.is_connected() && iso.size() == 2 && nontrivial) {
      FormalCharacter v1 = rep.character().empty_like(), v2 = rep.character().empty_like();
      for (const auto& s : rep.summands()) (s.highest == iso[0].first ? v1 : v2) += s.character;
      c.status = S::not_fired;
      for (const auto& row : generator_ledger(v1, v2, max_degree))
        if (row.beta[0] * row.beta[1] >= 2 && row.generators_lower_bound > 0) {
          c.status = S::fired;
          c.detail = "at least " + row.generators_lower_bound.str() + " minimal generator(s) in bidegree " + row.beta.str();
          break;
        }
      if (c.status == S::not_fired) c.detail = "no certified generator through degree " + std::to_string(max_degree);
    } else {
      c.detail = "needs exactly two nontrivial isotypic components";
    }
    out.push_back(c);
  }
  {
    CriterionResult c{criteria::kGeneratorCount, "sum of (m_i + 1) against the Krull dimension of C[2V]^G",
                      S::not_evaluable, ""};
    if (facts.degrees && facts.krull_dim_2v) {
      int sum = 0;
      for (int m : *facts.degrees) sum += m + 1;
      const int krull = *facts.krull_dim_2v;
      c.detail = "sum = " + std::to_string(sum) + ", Krull dimension = " + std::to_string(krull);
      if (sum < krull)
        c.status = S::fired;
      else if (sum == krull && facts.coregular_2v)
        c.status = *facts.coregular_2v ? S::not_fired : S::fired;
      else if (sum == krull)
        c.detail += "; coregularity of 2V unknown";
      else
        c.status = S::not_fired;
      if (sum == krull && facts.coregular_2v && !*facts.coregular_2v) c.detail += ", 2V not coregular";
    } else {
      c.detail = "needs catalog generator degrees and Krull dimension of C[2V]^G";
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<CriterionResult> fired(const std::vector<CriterionResult>& all) {
  std::vector<CriterionResult> out;
  for (const auto& c : all)
    if (c.status == CriterionResult::Status::fired) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------------
// Consistency checks between verdicts

/// A submodule W of V cannot fail within the window where V holds.
inline void require_submodule_consistency(const Verdict& submodule, const Verdict& whole) {
  if (submodule.fails() && submodule.beta && whole.holds() && submodule.beta->total() <= whole.degree_bound)
    throw ConsistencyFault("submodule fails at " + submodule.beta->str() + " but the whole module holds up to " +
                           std::to_string(whole.degree_bound));
}

/// Failure at k persists at k + 1.
inline void require_k_monotone(const Verdict& at_k, const Verdict& at_k_plus_1) {
  if (at_k.fails() && at_k.beta && at_k_plus_1.holds() && at_k.beta->total() <= at_k_plus_1.degree_bound)
    throw ConsistencyFault("fails at " + at_k.beta->str() + " for k but holds up to " +
                           std::to_string(at_k_plus_1.degree_bound) + " for k + 1");
}

}  // namespace polaris

#endif  // POLARIS_POLCHECK_HPP
