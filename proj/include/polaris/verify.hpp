#ifndef POLARIS_VERIFY_HPP
#define POLARIS_VERIFY_HPP

// The verification suite: numbered acceptance items with runtime budgets, and every
// machine-checkable catalog claim.

#include "polaris/catalog.hpp"
#include "polaris/properties.hpp"
#include "polaris/report.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace polaris {

struct ItemResult {
  enum class Outcome { pass, fail, consistent, unchecked };
  std::string id;
  std::string title;
  Outcome outcome = Outcome::fail;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds; 0 means none

  bool failed() const { return outcome == Outcome::fail; }
};

inline const char* outcome_name(ItemResult::Outcome o) {
  switch (o) {
    case ItemResult::Outcome::pass: return "PASS";
    case ItemResult::Outcome::consistent: return "CONSISTENT";
    case ItemResult::Outcome::unchecked: return "UNCHECKED";
    default: return "FAIL";
  }
}

namespace detail {

inline std::ostream& operator<<(std::ostream& os, const MultiDegree& m) { return os << m.str(); }
inline std::ostream& operator<<(std::ostream& os, Verdict::Status s) { return os << status_name(s); }

/// Collects named comparisons; the item passes when all of them hold.
class Checks {
 public:
  template <class A, class B>
  void equal(const std::string& what, const A& actual, const B& expected) {
    std::ostringstream s;
    s << what << " = " << actual;
    if (!(actual == expected)) {
      s << " (expected " << expected << ")";
      ok_ = false;
    }
    parts_.push_back(s.str());
  }
  void that(const std::string& what, bool cond) {
    parts_.push_back(what + (cond ? "" : " [violated]"));
    ok_ = ok_ && cond;
  }
  void note(const std::string& what) { parts_.push_back(what); }
  bool ok() const { return ok_; }
  std::string str() const {
    std::string out;
    for (const auto& p : parts_) out += (out.empty() ? "" : "; ") + p;
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> parts_;
};

inline ItemResult timed(std::string id, std::string title, double budget, const std::function<Checks()>& body) {
  ItemResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.budget = budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    Checks c = body();
    r.outcome = c.ok() ? ItemResult::Outcome::pass : ItemResult::Outcome::fail;
    r.detail = c.str();
  } catch (const std::exception& e) {
    r.outcome = ItemResult::Outcome::fail;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && r.seconds > budget) {
    r.outcome = ItemResult::Outcome::fail;
    r.detail += "; over the " + std::to_string(static_cast<long long>(budget)) + " s budget";
  }
  return r;
}

inline CheckOptions options_for(const Catalog& catalog, const Representation& rep, Backend backend) {
  CheckOptions opt;
  opt.backend = backend;
  if (const auto* e = catalog.find_by_key(rep.canonical_key()); e && e->generators) opt.table = e->generators;
  return opt;
}

inline void expect_deficit(Checks& c, const Verdict& v, const MultiDegree& beta, const BigInt& dim, const BigInt& pol) {
  c.equal("status", v.status, Verdict::Status::fails_at);
  if (!v.fails()) {
    if (!v.reason.empty()) c.note("reason: " + v.reason);
    return;
  }
  c.that("deficit data present", v.beta && v.dim_invariants && v.pol_dim);
  if (v.beta) c.equal("multidegree", *v.beta, beta);
  if (v.dim_invariants) c.equal("dim", *v.dim_invariants, dim);
  if (v.pol_dim) c.equal("pol", *v.pol_dim, pol);
}

}  // namespace detail

// ---------------------------------------------------------------------------------
// Acceptance items

inline std::vector<int> extended_items() { return {3, 4}; }

inline ItemResult acceptance_item(int n, const Catalog& catalog) {
  using detail::Checks;
  using S = Verdict::Status;
  switch (n) {
    case 1:
      return detail::timed("1", "two binary vectors, exact backend", 5, [&] {
        Checks c;
        CheckRequest req{"A1: R1+R1", 2, 8, Backend::exact, 1};
        auto r = run_check(req, &catalog);
        c.equal("backend", r.verdict.backend, std::string("exact"));
        detail::expect_deficit(c, r.verdict, MultiDegree{1, 1}, 4, 1);
        c.equal("dim S^2 of four binary vectors", invariant_dim(resolve("A1: R1 * 4").character(), 2), 6);
        return c;
      });
    case 2:
      return detail::timed("2", "SL4 on cubic forms", 600, [&] {
        Checks c;
        auto rep = resolve("A3: [3,0,0]");
        bool zero = true;
        for (int d = 1; d <= 7; ++d) zero = zero && invariant_dim(rep.character(), d) == 0;
        c.that("I(d) = 0 for d = 1..7", zero);
        c.equal("I(8)", invariant_dim(rep.character(), 8), 1);
        c.equal("dim at (2,6)", multidegree_invariant_dim(rep.character(), MultiDegree{2, 6}), 2);
        auto v = check_k_polarization(rep, 2, 8, detail::options_for(catalog, rep, Backend::bound));
        detail::expect_deficit(c, v, MultiDegree{2, 6}, 2, 1);
        return c;
      });
    case 3:
      return detail::timed("3", "half-spin module of D8", 1800, [&] {
        Checks c;
        auto rep = resolve("D8: phi8");
        c.equal("I(2)", invariant_dim(rep.character(), 2), 1);
        auto opt = detail::options_for(catalog, rep, Backend::bound);
        c.equal("N(2,2)", pol_upper_bound(opt.table->degrees, 2, MultiDegree{2, 2}), 2);
        auto v = check_k_polarization(rep, 2, 4, opt);
        detail::expect_deficit(c, v, MultiDegree{2, 2}, 3, 2);
        return c;
      });
    case 4:
      return detail::timed("4", "third exterior power for A8", 3600, [&] {
        Checks c;
        auto rep = resolve("A8: phi3");
        bool zero = true;
        for (int d = 1; d <= 6; ++d) zero = zero && invariant_dim(rep.character(), d) == 0;
        c.that("I(d) = 0 for d <= 6", zero);
        auto opt = detail::options_for(catalog, rep, Backend::bound);
        auto v = certify_at(rep, MultiDegree{3, 3}, opt);
        c.equal("status at (3,3)", v.status, S::fails_at);
        c.that("dim at (3,3) >= 1", v.dim_invariants && *v.dim_invariants >= 1);
        if (v.dim_invariants) c.note("dim at (3,3) = " + v.dim_invariants->str());
        c.equal("N(3,3)", pol_upper_bound(opt.table->degrees, 2, MultiDegree{3, 3}), 0);
        auto scan = check_k_polarization(rep, 2, 6, opt);
        if (scan.beta) c.note("full scan first deficit at " + scan.beta->str());
        return c;
      });
    case 5:
      return detail::timed("5", "Weyl groups of types A and B hold", 120, [&] {
        Checks c;
        for (const char* text : {"finite(sym(3)): phi1", "finite(weyl(B,2)): phi1"})
          for (int k : {2, 3}) {
            auto v = check_k_polarization(resolve(text), k, 8, CheckOptions{Backend::exact, 1, std::nullopt});
            c.equal(std::string(text) + " k=" + std::to_string(k), v.status, S::holds_up_to);
          }
        return c;
      });
    case 6:
      return detail::timed("6", "Weyl group of type D4 fails", 600, [&] {
        Checks c;
        auto rep = resolve("finite(weyl(D,4)): phi1");
        auto v = check_k_polarization(rep, 2, 12, CheckOptions{Backend::exact, 1, std::nullopt});
        c.equal("status", v.status, S::fails_at);
        if (!v.fails()) return c;
        c.that("|beta| <= 12", v.beta->total() <= 12);
        c.note("deficit at " + v.beta->str() + ", dim " + v.dim_invariants->str() + ", span " + v.pol_dim->str());
        c.that("witness present", v.witness.has_value());
        if (v.witness) {
          c.that("witness Reynolds-fixed", reynolds(rep.group(), *v.witness) == *v.witness);
          c.note("witness " + v.witness->str());
        }
        return c;
      });
    case 7:
      return detail::timed("7", "defining module of B2 with its quadratic form", 300, [&] {
        Checks c;
        auto rep = resolve("B2: phi1");
        auto opt = detail::options_for(catalog, rep, Backend::exact);
        for (int k : {2, 3, 4}) {
          auto v = check_k_polarization(rep, k, 8, opt);
          c.equal("k=" + std::to_string(k), v.status, S::holds_up_to);
        }
        auto five = check_k_polarization(rep, 5, 6, opt);
        c.equal("k=5", five.status, S::fails_at);
        if (five.fails()) c.equal("k=5 multidegree", *five.beta, MultiDegree{1, 1, 1, 1, 1});
        return c;
      });
    case 8:
      return detail::timed("8", "binary quartics fail", 60, [&] {
        Checks c;
        auto rep = resolve("A1: R4");
        c.equal("N(2,2)", pol_upper_bound({2, 3}, 2, MultiDegree{2, 2}), 2);
        c.equal("dim at (2,2)", multidegree_invariant_dim(rep.character(), MultiDegree{2, 2}), 3);
        CheckOptions opt{Backend::bound, 1, degrees_only({2, 3}, "external")};
        detail::expect_deficit(c, check_k_polarization(rep, 2, 4, opt), MultiDegree{2, 2}, 3, 2);
        return c;
      });
    case 9:
      return detail::timed("9", "criteria battery", 1, [&] {
        Checks c;
        const std::vector<std::pair<const char*, const char*>> cases = {
            {"A1: R3", criteria::kOddSl2}, {"torus(1): [1,-1,2,-2]", criteria::kBalancedTorus}, {"A1: R6", criteria::kRankOne}};
        for (const auto& [text, name] : cases) {
          auto hit = fired(quick_criteria(resolve(text), 8));
          std::string names;
          for (const auto& h : hit) names += (names.empty() ? "" : ",") + h.name;
          c.equal(text, names, std::string(name));
        }
        return c;
      });
    case 10:
      return detail::timed("10", "property suites", 300, [&] {
        Checks c;
        for (const auto& s : props::all_suites(120)) {
          c.that(s.name + " " + std::to_string(s.instances - s.failures) + "/" + std::to_string(s.instances),
                 s.ok() && s.instances >= 100);
          if (!s.first_failure.empty()) c.note("first failure: " + s.first_failure);
        }
        return c;
      });
    default: throw std::invalid_argument("no acceptance item " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------------
// Catalog claims

namespace detail {

inline std::string claim_id(const CatalogEntry& e, const Claim& c, std::size_t index) {
  std::string id = e.id + " k=" + std::to_string(c.k);
  if (c.check.criterion) id += " " + *c.check.criterion;
  if (c.check.rep) id += " on " + *c.check.rep;
  if (!c.check.criterion && !c.check.rep && index > 0) id += " #" + std::to_string(index + 1);
  return id;
}

inline void compare_expectation(Checks& c, const Verdict& v, const ClaimExpectation& x) {
  if (x.multidegree && v.beta) c.equal("multidegree", *v.beta, *x.multidegree);
  if (x.dim_invariants && v.dim_invariants) c.equal("dim", *v.dim_invariants, *x.dim_invariants);
  if (x.pol_dim && v.pol_dim) c.equal("pol", *v.pol_dim, *x.pol_dim);
}

}  // namespace detail

/// Checks one claim. Verdicts from scans are appended to `scans` for consistency checks.
inline ItemResult verify_claim(const Catalog& catalog, const CatalogEntry& entry, const Claim& claim, std::size_t index,
                               std::vector<std::pair<std::string, Verdict>>* scans = nullptr, int threads = 1) {
  using detail::Checks;
  using S = Verdict::Status;
  const std::string text = claim.check.rep.value_or(entry.rep);
  const std::string title = entry.title.empty() ? text : entry.title;
  ItemResult::Outcome soft = ItemResult::Outcome::pass;
  auto result = detail::timed(detail::claim_id(entry, claim, index), title, 0, [&] {
    Checks c;
    Representation rep = resolve(text);
    const CatalogEntry* data = claim.check.rep ? catalog.find_by_key(rep.canonical_key()) : &entry;
    if (claim.check.criterion) {
      auto all = quick_criteria(rep, claim.check.max_degree, data ? data->facts() : CatalogFacts{});
      bool hit = false;
      for (const auto& r : all)
        if (r.name == *claim.check.criterion) {
          hit = r.status == CriterionResult::Status::fired;
          c.note(r.name + " " + status_name(r.status) + (r.detail.empty() ? "" : " (" + r.detail + ")"));
        }
      c.that("criterion fires", hit);
      c.equal("claimed status", claim.status, S::fails_at);
      return c;
    }
    CheckOptions opt;
    opt.backend = claim.check.backend;
    opt.threads = threads;
    if (data && data->generators) opt.table = data->generators;
    if (claim.check.certify) {
      auto v = certify_at(rep, *claim.check.certify, opt);
      c.equal("status at " + claim.check.certify->str(), v.status, claim.status);
      if (claim.expect) detail::compare_expectation(c, v, *claim.expect);
      return c;
    }
    auto v = check_k_polarization(rep, claim.k, claim.check.max_degree, opt);
    if (scans) scans->emplace_back(rep.canonical_key() + " k=" + std::to_string(claim.k), v);
    std::string got = std::string(status_name(v.status)) + " (" + v.backend + ")";
    if (v.beta && v.dim_invariants && v.pol_dim)
      got += " at " + v.beta->str() + ", dim " + v.dim_invariants->str() + ", pol " + v.pol_dim->str();
    if (!v.reason.empty()) got += ": " + v.reason;
    if (claim.status == S::fails_at) {
      c.that("fails: " + got, v.fails());
      if (claim.expect && v.fails()) detail::compare_expectation(c, v, *claim.expect);
    } else if (v.holds()) {
      c.note("holds up to " + std::to_string(v.degree_bound));
    } else if (v.status == S::inconclusive && v.reason.rfind("bound met", 0) == 0) {
      // The count bound is met everywhere: no contradiction, but no proof either.
      soft = ItemResult::Outcome::consistent;
      c.note("no deficit through degree " + std::to_string(v.degree_bound) + " (count bound only)");
    } else {
      c.that("holds: " + got, false);
    }
    return c;
  });
  if (!result.failed()) result.outcome = soft;
  if (claim.unchecked && !result.failed()) {
    result.outcome = ItemResult::Outcome::unchecked;
    result.detail = "unchecked: " + *claim.unchecked + "; low-degree consistency: " + result.detail;
  }
  return result;
}

/// Submodule and k-monotonicity consistency between scan verdicts of the catalog.
inline ItemResult verify_consistency(const std::vector<std::pair<std::string, Verdict>>& scans) {
  return detail::timed("consistency", "submodule and k-monotonicity invariants", 0, [&] {
    detail::Checks c;
    int pairs = 0;
    struct Key {
      std::string module;
      int k;
      std::string group;
      std::vector<std::pair<Weight, int>> isotypic;
    };
    std::map<std::string, Representation> reps;
    std::vector<Key> keys;
    for (const auto& [name, v] : scans) {
      const auto at = name.rfind(" k=");
      Key key{name.substr(0, at), std::stoi(name.substr(at + 3)), "", {}};
      auto it = reps.find(key.module);
      if (it == reps.end()) it = reps.emplace(key.module, resolve(key.module)).first;
      key.group = it->second.spec().group_str();
      key.isotypic = it->second.isotypic();
      keys.push_back(std::move(key));
    }
    auto contained = [](const Key& a, const Key& b) {
      for (const auto& [w, m] : a.isotypic) {
        auto it = std::find_if(b.isotypic.begin(), b.isotypic.end(), [&](const auto& p) { return p.first == w; });
        if (it == b.isotypic.end() || it->second < m) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = 0; j < keys.size(); ++j) {
        const Key &a = keys[i], &b = keys[j];
        if (a.module == b.module && b.k == a.k + 1) {
          require_k_monotone(scans[i].second, scans[j].second);
          ++pairs;
        } else if (a.module != b.module && a.k == b.k && a.group == b.group && contained(a, b)) {
          require_submodule_consistency(scans[i].second, scans[j].second);
          ++pairs;
        }
      }
    c.note(std::to_string(pairs) + " related pairs checked");
    return c;
  });
}

struct VerifySummary {
  std::vector<ItemResult> items;
  bool ok() const {
    return std::none_of(items.begin(), items.end(), [](const ItemResult& r) { return r.failed(); });
  }
};

/// Acceptance items (items 3 and 4 only with `extended`), then every catalog claim of the
/// selected suites, then the consistency invariants. Results are in a fixed order.
inline VerifySummary verify_paper(const Catalog& catalog, bool extended, int threads = 1,
                                  const std::function<void(const ItemResult&)>& progress = {}) {
  VerifySummary out;
  auto add = [&](ItemResult r) {
    if (progress) progress(r);
    out.items.push_back(std::move(r));
  };
  const auto ext = extended_items();
  for (int n = 1; n <= 10; ++n) {
    if (!extended && std::find(ext.begin(), ext.end(), n) != ext.end()) continue;
    add(acceptance_item(n, catalog));
  }
  std::vector<std::pair<std::string, Verdict>> scans;
  for (const auto& e : catalog.entries())
    for (std::size_t i = 0; i < e.claims.size(); ++i) {
      if (e.claims[i].suite == "extended" && !extended) continue;
      add(verify_claim(catalog, e, e.claims[i], i, &scans, threads));
    }
  add(verify_consistency(scans));
  return out;
}

inline std::string format_item(const ItemResult& r) {
  std::ostringstream s;
  s << outcome_name(r.outcome) << "  " << r.id << "  " << r.title << "  [" << std::fixed;
  s.precision(2);
  s << r.seconds << " s]";
  if (!r.detail.empty()) s << "\n      " << r.detail;
  return s.str();
}

inline nlohmann::ordered_json to_json(const VerifySummary& v) {
  nlohmann::ordered_json out;
  out["ok"] = v.ok();
  out["items"] = nlohmann::ordered_json::array();
  for (const auto& r : v.items)
    out["items"].push_back({{"id", r.id}, {"title", r.title}, {"outcome", outcome_name(r.outcome)}, {"detail", r.detail}});
  return out;
}

}  // namespace polaris

#endif  // POLARIS_VERIFY_HPP
