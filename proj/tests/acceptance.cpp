// Runs acceptance items 1-10 and prints one PASS/FAIL line each. Exit status 1 if any fails.

#include "polaris/catalog.hpp"
#include "polaris/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  using namespace polaris;
  const Catalog catalog = Catalog::load(argc > 1 ? argv[1] : kDefaultCatalogPath);
  int failures = 0;
  for (int n = 1; n <= 10; ++n) {
    const ItemResult r = acceptance_item(n, catalog);
    const bool pass = r.outcome == ItemResult::Outcome::pass;
    failures += pass ? 0 : 1;
    std::printf("%s %d  %s  (tolerance 0, exact; %.2f s of %.0f s budget)\n", pass ? "PASS" : "FAIL", n,
                r.title.c_str(), r.seconds, r.budget);
    std::printf("    %s\n", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 passed\n", 10 - failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
