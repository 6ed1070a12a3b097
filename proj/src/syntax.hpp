#pragma once

// Concrete ASCII syntax.
//
// Shared tokens: identifiers [A-Za-z_][A-Za-z0-9_']*, parentheses, ",", ".".
// Prefix operators bind tightest, then "*", "&", "+", "par", and "-o"
// (right-associative, loosest).  "forall x." / "exists x." scope maximally
// to the right; a quantified formula used as an operand must be
// parenthesized, except as the final right-hand side of "-o".
//
//   ILL:  atoms, top 1 0, !A ?A ~A, A*B A&B A+B A-oB, quantifiers.
//         "~A" is sugar for "A -o 0", "?A" for "~!~A"; the printer
//         re-recognizes both patterns.
//   IL:   atoms, top bot, A/\B A\/B A->B, quantifiers.
//   CLL:  atoms, top bot 1 0, !A ?A, A*B A&B A+B "A par B", quantifiers.
//
// Sequents: "H1, H2, ... |- C" (hypothesis list may be empty).
//
// Identifiers in term position parse as variables when bound by an
// enclosing quantifier and as constants otherwise.

#include <stdexcept>
#include <string>
#include <vector>

#include "formula.hpp"

namespace illtrans {

enum class Lang { IL, CLL, ILL };

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  size_t offset;
};

Formula parse_ill(const std::string& text);
SourceFormulaIL parse_il(const std::string& text);
SourceFormulaCLL parse_cll(const std::string& text);

struct ParsedSequent {
  std::vector<Formula> hyps;
  Formula goal;
};
ParsedSequent parse_sequent(const std::string& text);  // ILL language

std::string print(const Formula& f);
std::string print(const SourceFormulaIL& f);
std::string print(const SourceFormulaCLL& f);
std::string print(const Term& t);

}  // namespace illtrans
