#ifndef POLARIS_REPORT_HPP
#define POLARIS_REPORT_HPP

// The check command: scan plus quick criteria, with catalog-supplied generator data, and
// its JSON / text reports.

#include "polaris/catalog.hpp"
#include "polaris/polcheck.hpp"

#include <json.hpp>

#include <chrono>
#include <limits>
#include <sstream>
#include <string>

namespace polaris {

struct CheckRequest {
  std::string repspec;
  int k = 2;
  int max_degree = 8;
  Backend backend = Backend::automatic;
  int threads = 1;
};

struct Report {
  std::string rep;  // canonical text of the parsed descriptor
  int k = 2;
  Verdict verdict;
  long long timing_ms = 0;
};

/// Runs the scan; for k >= 2 also the quick criteria, any of which certifies failure.
inline Report run_check(const CheckRequest& req, const Catalog* catalog = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  Representation rep = resolve(req.repspec);
  const CatalogEntry* entry = catalog ? catalog->find_by_key(rep.canonical_key()) : nullptr;

  CheckOptions opt;
  opt.backend = req.backend;
  opt.threads = req.threads;
  if (entry && entry->generators) opt.table = entry->generators;
  Verdict v = check_k_polarization(rep, req.k, req.max_degree, opt);

  if (req.k >= 2) {
    v.criteria = fired(quick_criteria(rep, req.max_degree, entry ? entry->facts() : CatalogFacts{}));
    if (!v.fails() && !v.criteria.empty()) {
      // Keep the scanned window; drop any reason the scan gave for stopping.
      Verdict c;
      c.status = Verdict::Status::fails_at;
      c.backend = "criterion(" + v.criteria.front().name + ")";
      c.degree_bound = v.degree_bound;
      c.criteria = std::move(v.criteria);
      v = std::move(c);
    }
  }
  Report r;
  r.rep = rep.spec().str();
  r.k = req.k;
  r.verdict = std::move(v);
  r.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline int exit_code(const Report& r) { return r.verdict.status == Verdict::Status::inconclusive ? 2 : 0; }

namespace detail {

inline long long to_int64(const BigInt& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw std::overflow_error("value " + n.str() + " does not fit a JSON integer");
  return static_cast<long long>(n);
}

}  // namespace detail

/// Keys in a fixed order so that identical verdicts serialize identically.
inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json verdict;
  const Verdict& v = r.verdict;
  verdict["status"] = status_name(v.status);
  if (v.degree_bound >= 0) verdict["degree_bound"] = v.degree_bound;
  if (v.beta) verdict["multidegree"] = v.beta->parts;
  if (v.dim_invariants) verdict["dim_invariants"] = detail::to_int64(*v.dim_invariants);
  if (v.pol_dim) verdict["pol_dim"] = detail::to_int64(*v.pol_dim);
  verdict["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : v.criteria) verdict["criteria"].push_back({{"name", c.name}, {"citation", c.citation}});
  if (!v.reason.empty()) verdict["reason"] = v.reason;
  if (v.witness) verdict["witness"] = v.witness->str();

  nlohmann::ordered_json out;
  out["rep"] = r.rep;
  out["k"] = r.k;
  out["backend"] = v.backend;
  out["verdict"] = std::move(verdict);
  out["timing_ms"] = r.timing_ms;
  return out;
}

inline std::string to_text(const Report& r) {
  const Verdict& v = r.verdict;
  std::ostringstream s;
  s << "rep: " << r.rep << "\n";
  s << "k: " << r.k << "\n";
  s << "backend: " << v.backend << "\n";
  s << "status: " << status_name(v.status) << "\n";
  if (v.degree_bound >= 0) s << "degree bound: " << v.degree_bound << "\n";
  if (v.beta) s << "multidegree: " << v.beta->str() << "\n";
  if (v.dim_invariants) s << "invariants: " << *v.dim_invariants << "\n";
  if (v.pol_dim) s << "polarized: " << *v.pol_dim << "\n";
  if (v.witness) s << "witness: " << v.witness->str() << "\n";
  if (!v.reason.empty()) s << "reason: " << v.reason << "\n";
  for (const auto& c : v.criteria) s << "criterion: " << c.name << " (" << c.citation << ")\n";
  s << "time: " << r.timing_ms << " ms\n";
  return s.str();
}

}  // namespace polaris

#endif  // POLARIS_REPORT_HPP
