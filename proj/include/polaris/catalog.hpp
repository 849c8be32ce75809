#ifndef POLARIS_CATALOG_HPP
#define POLARIS_CATALOG_HPP

// The static catalog of (group, module) pairs: claims with citations, generator tables,
// Krull dimensions and slice chains, loaded from a JSON file.

#include "polaris/polcheck.hpp"
#include "polaris/repspec.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

struct Citation {
  std::string source;
  std::string statement;
};

struct IntFact {
  int value = 0;
  std::string provenance;
  std::string note;
};

struct BoolFact {
  bool value = false;
  std::string provenance;
  std::string note;
};

/// How a claim is checked. Exactly one of criterion, certify, or a scan (backend +
/// max_degree) applies. `rep` redirects the check to another module (a slice leaf).
struct ClaimCheck {
  std::optional<std::string> rep;
  std::optional<std::string> criterion;
  std::optional<MultiDegree> certify;
  Backend backend = Backend::automatic;
  int max_degree = 0;
};

struct ClaimExpectation {
  std::optional<MultiDegree> multidegree;
  std::optional<BigInt> dim_invariants;
  std::optional<BigInt> pol_dim;
  std::string provenance;
};

struct Claim {
  int k = 2;
  Verdict::Status status = Verdict::Status::holds_up_to;
  ClaimCheck check;
  std::optional<ClaimExpectation> expect;
  std::string suite = "core";
  std::optional<std::string> unchecked;
  Citation citation;
};

struct SliceNode {
  std::string point;
  std::string rep;
  std::string note;
  Citation citation;
};

struct CatalogEntry {
  std::string id;
  std::string rep;
  std::string title;
  std::optional<std::string> source_label;
  std::optional<std::string> label_note;
  std::optional<GeneratorTable> generators;
  std::string generators_note;
  std::optional<IntFact> krull_dim_2v;
  std::optional<BoolFact> coregular_2v;
  std::vector<SliceNode> slice_chain;
  std::vector<Claim> claims;
  nlohmann::json raw;  // the entry as stored, for display

  CatalogFacts facts() const {
    CatalogFacts f;
    if (generators) f.degrees = generators->degrees;
    if (krull_dim_2v) f.krull_dim_2v = krull_dim_2v->value;
    if (coregular_2v) f.coregular_2v = coregular_2v->value;
    return f;
  }
};

namespace detail {

using nlohmann::json;

inline std::string where(const std::string& id, const std::string& field) {
  return "catalog entry '" + id + "': " + field;
}

inline const json& require(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) throw std::invalid_argument(where(ctx, std::string("missing field '") + key + "'"));
  return j.at(key);
}

inline Citation citation_from(const json& j, const std::string& id) {
  const json& c = require(j, "citation", id);
  Citation out{require(c, "source", id).get<std::string>(), require(c, "statement", id).get<std::string>()};
  if (out.source.empty() || out.statement.empty()) throw std::invalid_argument(where(id, "empty citation"));
  return out;
}

inline std::string provenance_value(const json& j, const std::string& id) {
  static const std::set<std::string> allowed = {"published", "external", "computed"};
  auto p = j.get<std::string>();
  if (!allowed.count(p)) throw std::invalid_argument(where(id, "unknown provenance '" + p + "'"));
  return p;
}

inline Verdict::Status status_from(const std::string& s, const std::string& id) {
  if (s == "holds_up_to") return Verdict::Status::holds_up_to;
  if (s == "fails_at") return Verdict::Status::fails_at;
  throw std::invalid_argument(where(id, "unknown claim status '" + s + "'"));
}

inline GeneratorTable generators_from(const json& g, const std::string& id, int dimension) {
  auto degrees = require(g, "degrees", id).get<std::vector<int>>();
  std::vector<std::string> provenance;
  for (const auto& p : require(g, "provenance", id)) provenance.push_back(provenance_value(p, id));
  if (provenance.size() != degrees.size()) throw std::invalid_argument(where(id, "one provenance per generator degree"));
  GeneratorTable t;
  if (g.contains("explicit")) {
    if (!g.at("explicit").is_array()) throw std::invalid_argument(where(id, "explicit generators must be a list"));
    std::vector<Polynomial> polys;
    for (const auto& text : g.at("explicit")) polys.push_back(parse_polynomial(text.get<std::string>(), 1, dimension));
    t = explicit_table(std::move(polys), "external");
    auto sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    if (t.degrees != sorted) throw std::invalid_argument(where(id, "explicit generators disagree with listed degrees"));
  } else {
    t = degrees_only(degrees, "external");
  }
  // Provenance follows the listed order; degrees are sorted, so sort the pairs together.
  std::vector<std::pair<int, std::string>> pairs;
  for (std::size_t i = 0; i < degrees.size(); ++i) pairs.emplace_back(degrees[i], provenance[i]);
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pairs.size(); ++i) t.provenance[i] = pairs[i].second;
  return t;
}

inline Claim claim_from(const json& j, const std::string& id) {
  Claim c;
  c.k = require(j, "k", id).get<int>();
  if (c.k < 1) throw std::invalid_argument(where(id, "claim with k < 1"));
  c.status = status_from(require(j, "status", id).get<std::string>(), id);
  c.suite = j.value("suite", "core");
  if (c.suite != "core" && c.suite != "extended") throw std::invalid_argument(where(id, "unknown suite " + c.suite));
  if (j.contains("unchecked")) c.unchecked = j.at("unchecked").get<std::string>();
  c.citation = citation_from(j, id);
  const json& chk = require(j, "check", id);
  if (chk.contains("rep")) c.check.rep = chk.at("rep").get<std::string>();
  if (chk.contains("criterion")) c.check.criterion = chk.at("criterion").get<std::string>();
  if (chk.contains("certify")) c.check.certify = MultiDegree(chk.at("certify").get<std::vector<int>>());
  if (chk.contains("backend")) c.check.backend = parse_backend(chk.at("backend").get<std::string>());
  c.check.max_degree = chk.value("max_degree", 0);
  if (!c.check.certify && c.check.max_degree < 1) throw std::invalid_argument(where(id, "claim check needs max_degree"));
  if (j.contains("expect")) {
    const json& e = j.at("expect");
    ClaimExpectation x;
    if (e.contains("multidegree")) x.multidegree = MultiDegree(e.at("multidegree").get<std::vector<int>>());
    if (e.contains("dim_invariants")) x.dim_invariants = BigInt(e.at("dim_invariants").get<long long>());
    if (e.contains("pol_dim")) x.pol_dim = BigInt(e.at("pol_dim").get<long long>());
    x.provenance = provenance_value(require(e, "provenance", id), id);
    c.expect = x;
  }
  return c;
}

}  // namespace detail

class Catalog {
 public:
  static Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("catalog " + path + ": " + e.what());
    }
    return from_json(j);
  }

  static Catalog from_json(const nlohmann::json& j) {
    Catalog c;
    for (const auto& e : detail::require(j, "entries", "<root>")) c.add(entry_from(e));
    return c;
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  const CatalogEntry* find(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return &e;
    return nullptr;
  }

  /// The first entry (in file order) whose module has this canonical key and carries data.
  const CatalogEntry* find_by_key(const std::string& key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &entries_[it->second];
  }

 private:
  static CatalogEntry entry_from(const nlohmann::json& j) {
    CatalogEntry e;
    e.id = detail::require(j, "id", "<unnamed>").get<std::string>();
    e.rep = detail::require(j, "rep", e.id).get<std::string>();
    e.title = j.value("title", "");
    Representation rep = [&] {
      try {
        return resolve(e.rep);
      } catch (const std::exception& ex) {
        throw std::invalid_argument(detail::where(e.id, ex.what()));
      }
    }();
    if (j.contains("source_label")) e.source_label = j.at("source_label").get<std::string>();
    if (j.contains("label_note")) e.label_note = j.at("label_note").get<std::string>();
    if (e.source_label && !e.label_note) throw std::invalid_argument(detail::where(e.id, "source_label without label_note"));
    if (j.contains("generators")) {
      e.generators = detail::generators_from(j.at("generators"), e.id, rep.dimension());
      e.generators_note = j.at("generators").value("note", "");
    }
    auto int_fact = [&](const char* key) -> std::optional<IntFact> {
      if (!j.contains(key)) return std::nullopt;
      const auto& f = j.at(key);
      return IntFact{detail::require(f, "value", e.id).get<int>(), detail::provenance_value(detail::require(f, "provenance", e.id), e.id),
                     f.value("note", "")};
    };
    e.krull_dim_2v = int_fact("krull_dim_2v");
    if (j.contains("coregular_2v")) {
      const auto& f = j.at("coregular_2v");
      e.coregular_2v = BoolFact{detail::require(f, "value", e.id).get<bool>(),
                                detail::provenance_value(detail::require(f, "provenance", e.id), e.id), f.value("note", "")};
    }
    for (const auto& s : j.value("slice_chain", nlohmann::json::array())) {
      SliceNode n{detail::require(s, "point", e.id).get<std::string>(), detail::require(s, "rep", e.id).get<std::string>(),
                  s.value("note", ""), detail::citation_from(s, e.id)};
      parse_repspec(n.rep);
      e.slice_chain.push_back(n);
    }
    for (const auto& c : detail::require(j, "claims", e.id)) e.claims.push_back(detail::claim_from(c, e.id));
    if (e.claims.empty()) throw std::invalid_argument(detail::where(e.id, "no claims"));
    e.raw = j;
    return e;
  }

  void add(CatalogEntry e) {
    if (find(e.id)) throw std::invalid_argument("duplicate catalog id '" + e.id + "'");
    const std::string key = resolve(e.rep).canonical_key();
    const bool has_data = e.generators || e.krull_dim_2v;
    entries_.push_back(std::move(e));
    if (has_data && !by_key_.count(key)) by_key_[key] = entries_.size() - 1;
  }

  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> by_key_;
};

#ifdef POLARIS_DEFAULT_CATALOG
inline constexpr const char* kDefaultCatalogPath = POLARIS_DEFAULT_CATALOG;
#else
inline constexpr const char* kDefaultCatalogPath = "data/catalog.json";
#endif

}  // namespace polaris

#endif  // POLARIS_CATALOG_HPP
