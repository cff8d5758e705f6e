// Acceptance gate: runs every criterion suite and prints one verdict
// line per criterion.  All comparisons are exact rational or string
// equality; the pinned tolerance is zero everywhere.  Criterion 10
// additionally requires the full selftest subcommand to exit 0.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bnskein/acceptance.hpp"
#include "bnskein/cli.hpp"

int main() {
  using bnskein::accept::CriterionResult;
  std::vector<CriterionResult> results = bnskein::accept::run_core();

  std::ostringstream sink;
  int selftest_exit = bnskein::cli::run({"selftest"}, sink, sink);
  for (CriterionResult& r : results) {
    if (r.index != 10) continue;
    if (selftest_exit == 0) {
      r.detail += ", selftest exit 0";
    } else {
      r.passed = false;
      r.detail = "selftest exited " + std::to_string(selftest_exit);
    }
  }

  int passed = 0;
  for (const CriterionResult& r : results) {
    std::cout << "criterion " << r.index << "/10 " << (r.passed ? "PASS" : "FAIL") << " "
              << r.name << " (" << r.detail << ")\n";
    if (r.passed) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
