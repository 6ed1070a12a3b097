#pragma once

// Independent proof checking.  Walks a proof tree and verifies that every
// node is a correct instance of its named rule under the given theory,
// using alpha-invariant multiset comparisons, so it accepts proofs the
// search engine produced from memoized alpha-variants.  Shares no code
// with the search engine beyond the formula layer.

#include <string>
#include <vector>

#include "prover.hpp"

namespace illtrans {

struct ReplayResult {
  bool ok = false;
  std::string reason;  // set on failure: offending rule and why
};

ReplayResult replay_check(const ProofNode& root, const Theory& th,
                          const std::vector<Sequent>& axioms = {});

}  // namespace illtrans
