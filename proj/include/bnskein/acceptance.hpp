#pragma once

#include <string>
#include <vector>

namespace bnskein {
namespace accept {

// Outcome of one property suite: a stable index and name, pass/fail,
// and a short human-readable account of what was covered or of the
// first failure.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/*
 * Runs every property suite that can be checked in-process: the
 * closed-form evaluators against their rewrite oracles, confluence on
 * random states, the normalization families, the graded dimension
 * counts, the vanishing lemmas, graph reduction, the Seifert assembly,
 * and the state round-trip corpus.  Each suite is independent; a
 * failure is reported in its result rather than thrown.
 */
std::vector<CriterionResult> run_core();

}  // namespace accept
}  // namespace bnskein
