#pragma once

// Deterministic random formula generation for property tests and the
// corpus CLI subcommand, plus exhaustive enumeration of small formulas.
//
// Generated formulas contain no free variables: unary atoms take a bound
// variable when one is in scope and the constant "c" otherwise, so every
// formula survives a print/parse round trip unchanged (the parser reads
// free identifiers in term position as constants).

#include <cstdint>
#include <vector>

#include "formula.hpp"

namespace illtrans {

struct CorpusParams {
  uint64_t seed = 1;
  size_t count = 100;
  int max_depth = 6;
  int atoms = 3;           // names P, Q, R, ...; odd indices are unary
  int max_bound_vars = 2;  // nesting cap for quantifiers
  bool quantifiers = true;
  bool constants = true;   // allow top / 0 / 1 leaves (top / bot / 1 / 0 per language)
};

std::vector<Formula> random_ill(const CorpusParams& p);
std::vector<SourceFormulaIL> random_il(const CorpusParams& p);
std::vector<SourceFormulaCLL> random_cll(const CorpusParams& p);

// Every quantifier-free, constant-free formula of height <= depth over the
// first `atoms` atom names, deduplicated, in deterministic order.
std::vector<Formula> enumerate_ill(int depth, int atoms);

}  // namespace illtrans
