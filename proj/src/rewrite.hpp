#pragma once

// Single-pass strategy-ordered rewriting.
//
// Rule patterns are ordinary formulas over the metavariable atoms "A" and
// "B", which match any subformula; everything else (including the expanded
// ~~ prefixes, i.e. Lolli(Lolli(_, 0), 0) shapes, and ! markers) must match
// literally.  Quantifier patterns match any bound-variable name and carry
// the binding over to the right-hand side.
//
// Outside: at each node try the rules first (first match fires, once),
// then recurse into the children of the result.  Inside: recurse into the
// children first, then try the rules once at the rebuilt node.  Either way
// every position is visited exactly once.

#include <string>
#include <vector>

#include "formula.hpp"

namespace illtrans {

struct ReductionRule {
  Formula lhs;
  Formula rhs;
  std::string name;
};

enum class Strategy { Outside, Inside };

struct TraceEntry {
  std::string path;  // e.g. "l.r" from the root; "" is the root itself
  std::string rule;
  Formula before;
  Formula after;
};

Formula apply(const Formula& a, const std::vector<ReductionRule>& rules, Strategy s,
              std::vector<TraceEntry>* trace = nullptr);

enum class SimplificationId {
  GGfromKolmO,
  KurodaFromKolmI,
  StarFromGfO,
  CircFromGfI,
  LinGGfromKolmO,
  LinKurodaFromKolmI,
};

const char* simplification_name(SimplificationId id);  // CLI spelling
bool simplification_from_name(const std::string& name, SimplificationId* out);

const std::vector<ReductionRule>& rules_for(SimplificationId id);
Strategy strategy_for(SimplificationId id);

// Applies a named simplification along the translation structure of the
// source formula: one visit per source node, at most one rule firing at the
// root of that node's translated image (Outside fires before the child
// images are simplified, Inside after).  For the ~~-based rule sets this
// agrees with the positional apply() above, but for the !-based inside
// rules it does not: a positional walk sees extra positions in the middle
// of nested ! stacks (the marker is indistinguishable from a translated !
// connective) and over-fires there, e.g. for the source !!P.  The
// simplification identities are claims about the translated image of each
// source connective, so the checker rewrites along that structure.
Formula apply_along(SimplificationId id, const Formula& a);

// Source translation (what the rules rewrite) and target translation (what
// the result must equal syntactically).
Formula source_translation(SimplificationId id, const Formula& a);
Formula target_translation(SimplificationId id, const Formula& a);

struct SimplificationReport {
  struct Row {
    Formula input;
    Formula expected;
    Formula got;
    bool ok;
  };
  std::vector<Row> rows;
  size_t failures = 0;
};

SimplificationReport check_simplification(SimplificationId id,
                                          const std::vector<Formula>& corpus);

}  // namespace illtrans
