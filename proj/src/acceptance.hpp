#pragma once

// The self-check suite behind the `selftest` subcommand and the
// acceptance test binary: nine criteria covering the worked rewriting
// example, the simplification identities, both equivalence matrices, the
// lemma suite, the composition theorems, soundness spot checks, parser
// round trips, and proof replay.  Every proof produced along the way is
// registered and re-checked by the independent replay checker in the
// final criterion.

#include <functional>
#include <string>
#include <vector>

namespace illtrans {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_passed() const {
    for (const CriterionResult& r : results)
      if (!r.passed) return false;
    return !results.empty();
  }
};

struct AcceptanceOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  // invoked after each criterion finishes, e.g. for progress output
  std::function<void(const CriterionResult&)> on_result;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& opt = {});

// One line per criterion: "AC<n> <name>: PASS|FAIL (<t>s) <detail>".
std::string acceptance_to_text(const AcceptanceReport& r);

}  // namespace illtrans
