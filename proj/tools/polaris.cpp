// polaris: command-line front end.

#include "polaris/catalog.hpp"
#include "polaris/fingrp.hpp"
#include "polaris/polcheck.hpp"
#include "polaris/report.hpp"
#include "polaris/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace polaris;
using ojson = nlohmann::ordered_json;

namespace {

ojson int_or_string(const BigInt& n) {
  if (n <= std::numeric_limits<long long>::max() && n >= std::numeric_limits<long long>::min())
    return static_cast<long long>(n);
  return n.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_format(const std::string& f) {
  if (f != "json" && f != "text") throw std::invalid_argument("unknown format '" + f + "' (json, text)");
}

Catalog load_catalog(const std::string& path) { return Catalog::load(path.empty() ? kDefaultCatalogPath : path); }

int cmd_check(const std::string& spec, int k, int max_degree, const std::string& backend, const std::string& format,
              int threads, const std::string& catalog_path, bool no_catalog) {
  check_format(format);
  CheckRequest req{spec, k, max_degree, parse_backend(backend), threads};
  std::optional<Catalog> catalog;
  if (!no_catalog) catalog = load_catalog(catalog_path);
  Report r = run_check(req, catalog ? &*catalog : nullptr);
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return exit_code(r);
}

int print_dims(const std::string& label, int k, int max_degree, const std::string& format,
               const std::function<BigInt(const MultiDegree&)>& dim) {
  check_format(format);
  ojson rows = ojson::array();
  for (const auto& beta : multidegrees_up_to(k, max_degree)) {
    const BigInt d = dim(beta);
    if (format == "text")
      std::cout << beta.str() << "  " << d << "\n";
    else
      rows.push_back({{"multidegree", beta.parts}, {"dim", int_or_string(d)}});
  }
  if (format == "json") {
    ojson out;
    out["rep"] = label;
    out["k"] = k;
    out["dims"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_dims(const std::string& spec, int k, int max_degree, const std::string& format) {
  Representation rep = resolve(spec);
  InvariantDims dims(rep, k);
  dims.prepare(max_degree);
  return print_dims(rep.spec().str(), k, max_degree, format, [&](const MultiDegree& b) { return dims.dim(b); });
}

int cmd_molien(const std::string& name, int k, int max_degree, const std::string& format) {
  FiniteGroup g = named_group(name);
  if (format == "text") std::cerr << g.name() << ": order " << g.order() << " on C^" << g.dimension() << "\n";
  return print_dims(g.name(), k, max_degree, format, [&](const MultiDegree& b) { return molien_dim(g, b); });
}

int cmd_polarize(const std::string& path, int k, const std::string& format) {
  check_format(format);
  Polynomial f = parse_polynomial(read_file(path), 1, 0);
  Polarization pieces = polarize(f, k);
  ojson out = ojson::array();
  for (const auto& [alpha, p] : pieces) {
    if (format == "text")
      std::cout << alpha.str() << "  " << p.str() << "\n";
    else
      out.push_back({{"alpha", alpha.parts}, {"polynomial", p.str()}});
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_catalog_list(const std::string& catalog_path) {
  Catalog c = load_catalog(catalog_path);
  for (const auto& e : c.entries()) std::cout << e.id << "  " << e.rep << "  " << e.title << "\n";
  return 0;
}

void show_text(const CatalogEntry& e) {
  std::cout << e.id << ": " << e.title << "\n";
  std::cout << "rep: " << e.rep << "\n";
  if (e.source_label) std::cout << "source label: " << *e.source_label << " (" << *e.label_note << ")\n";
  if (e.generators) {
    std::cout << "generator degrees:";
    for (std::size_t i = 0; i < e.generators->degrees.size(); ++i)
      std::cout << " " << e.generators->degrees[i] << " [" << e.generators->provenance[i] << "]";
    std::cout << "\n";
    if (!e.generators_note.empty()) std::cout << "  " << e.generators_note << "\n";
  }
  if (e.krull_dim_2v)
    std::cout << "Krull dimension of C[2V]^G: " << e.krull_dim_2v->value << " [" << e.krull_dim_2v->provenance << "]\n";
  if (e.coregular_2v)
    std::cout << "2V coregular: " << (e.coregular_2v->value ? "yes" : "no") << " [" << e.coregular_2v->provenance << "]\n";
  for (const auto& n : e.slice_chain) {
    std::cout << "slice at " << n.point << " -> " << n.rep << "\n";
    if (!n.note.empty()) std::cout << "  " << n.note << "\n";
    std::cout << "  cite: " << n.citation.source << ": " << n.citation.statement << "\n";
  }
  for (const auto& c : e.claims) {
    std::cout << "claim k=" << c.k << " " << status_name(c.status) << " (" << c.suite << ")";
    if (c.unchecked) std::cout << " unchecked: " << *c.unchecked;
    std::cout << "\n  cite: " << c.citation.source << ": " << c.citation.statement << "\n";
  }
}

int cmd_catalog_show(const std::string& id, const std::string& format, const std::string& catalog_path) {
  check_format(format);
  Catalog c = load_catalog(catalog_path);
  const CatalogEntry* e = c.find(id);
  if (!e) throw std::invalid_argument("no catalog entry '" + id + "'");
  if (format == "json")
    std::cout << e->raw.dump(2) << "\n";
  else
    show_text(*e);
  return 0;
}

int cmd_verify(bool extended, const std::string& format, const std::string& fault, int threads,
               const std::string& catalog_path) {
  check_format(format);
  if (!fault.empty()) {
    if (fault != "sym-power-sign") throw std::invalid_argument("unknown fault '" + fault + "' (sym-power-sign)");
    testing_hooks::flip_sym_power_sign = true;
  }
  Catalog c = load_catalog(catalog_path);
  std::function<void(const ItemResult&)> progress;
  if (format == "text") progress = [](const ItemResult& r) { std::cout << format_item(r) << std::endl; };
  VerifySummary s = verify_paper(c, extended, threads, progress);
  if (format == "json")
    std::cout << to_json(s).dump(2) << "\n";
  else
    std::cout << (s.ok() ? "all items passed" : "some items FAILED") << "\n";
  return s.ok() ? 0 : 1;
}

int cmd_sweep(const std::vector<std::string>& groups, int max_degree) {
  for (const auto& name : groups) {
    Representation rep = resolve("finite(" + name + "): phi1");
    const bool refl = generated_by_reflections(rep.group());
    Verdict v = check_k_polarization(rep, 2, max_degree, CheckOptions{});
    std::cout << name << "  order " << rep.group().order() << "  reflections " << (refl ? "yes" : "no") << "  "
              << status_name(v.status);
    if (v.beta) std::cout << " " << v.beta->str();
    if (v.degree_bound >= 0 && !v.beta) std::cout << " " << v.degree_bound;
    if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polaris: invariant dimensions and the k-polarization property"};
  app.require_subcommand(1);

  std::string spec, backend = "auto", format = "json", catalog_path, fault, group, path, id;
  int k = 2, max_degree = 8, threads = 1;
  bool no_catalog = false, extended = false;

  auto* check = app.add_subcommand("check", "scan multidegrees for a polarization deficit");
  check->add_option("repspec", spec, "module, e.g. \"A1: R1+R1\"")->required();
  check->add_option("--k", k, "number of copies")->check(CLI::PositiveNumber);
  check->add_option("--max-degree", max_degree, "total degree bound")->check(CLI::PositiveNumber);
  check->add_option("--backend", backend, "auto, exact or bound");
  check->add_option("--format", format, "json or text");
  check->add_option("--threads", threads)->check(CLI::PositiveNumber);
  check->add_option("--catalog", catalog_path, "catalog file for generator data");
  check->add_flag("--no-catalog", no_catalog, "ignore catalog generator data");

  auto* dims = app.add_subcommand("dims", "dim C[kV]^G for all multidegrees up to a total degree");
  dims->add_option("repspec", spec)->required();
  dims->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  dims->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  std::string table_format = "text";
  dims->add_option("--format", table_format, "text or json");

  auto* molien = app.add_subcommand("molien", "Molien dimensions of a finite matrix group");
  molien->add_option("group", group, "weyl(T,n), sym(n) or file:path")->required();
  molien->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  molien->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  molien->add_option("--format", table_format, "text or json");

  auto* pol = app.add_subcommand("polarize", "polarizations of a polynomial read from a file");
  pol->add_option("poly-file", path)->required();
  pol->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  pol->add_option("--format", table_format, "text or json");

  auto* cat = app.add_subcommand("catalog", "inspect the catalog");
  cat->require_subcommand(1);
  cat->add_option("--catalog", catalog_path);
  auto* list = cat->add_subcommand("list", "list entries");
  auto* show = cat->add_subcommand("show", "show one entry");
  show->add_option("id", id)->required();
  std::string show_format = "text";
  show->add_option("--format", show_format, "text or json");

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance items and every catalog claim");
  std::string verify_format = "text";
  verify->add_flag("--extended", extended, "include the long computations");
  verify->add_option("--format", verify_format);
  verify->add_option("--inject-fault", fault, "sym-power-sign");
  verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
  verify->add_option("--catalog", catalog_path);

  auto* sweep = app.add_subcommand("sweep", "k = 2 verdicts of small finite groups next to their reflection flag");
  std::vector<std::string> groups = {"sym(2)",  "sym(3)",  "weyl(A,2)", "weyl(B,2)", "weyl(G,2)",
                                     "file:" POLARIS_GROUPS_DIR "/neg2.json", "file:" POLARIS_GROUPS_DIR "/rot3.json",
                                     "file:" POLARIS_GROUPS_DIR "/rot4.json"};
  int sweep_degree = 6;
  sweep->add_option("groups", groups, "finite groups to test");
  sweep->add_option("--max-degree", sweep_degree)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) return cmd_check(spec, k, max_degree, backend, format, threads, catalog_path, no_catalog);
    if (*dims) return cmd_dims(spec, k, max_degree, table_format);
    if (*molien) return cmd_molien(group, k, max_degree, table_format);
    if (*pol) return cmd_polarize(path, k, table_format);
    if (*list) return cmd_catalog_list(catalog_path);
    if (*show) return cmd_catalog_show(id, show_format, catalog_path);
    if (*verify) return cmd_verify(extended, verify_format, fault, threads, catalog_path);
    if (*sweep) return cmd_sweep(groups, sweep_degree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
