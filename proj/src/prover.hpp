#pragma once

// Bounded backward proof search for the single-succedent linear sequent
// calculus, with the two optional theory extensions:
//
//   pro:  A |- !A   (surfaced as the PRO right rule plus structural
//                    contraction/weakening on arbitrary hypotheses)
//   dne:  ~~A |- A  (surfaced as the DNE-R and DNE-L rules)
//
// (false,false) is plain ILL, (true,false) IL_b, (false,true) CLL_b and
// (true,true) CL_b.
//
// The search is cut-free by default, depth-bounded, with memoized
// failures and on-path loop pruning.  Contraction is bounded per formula
// by multiplicity.  NotFound distinguishes budget exhaustion from genuine
// saturation and is never a refutation claim.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "formula.hpp"

namespace illtrans {

struct Theory {
  bool pro = false;
  bool dne = false;

  static Theory ill() { return {false, false}; }
  static Theory ilb() { return {true, false}; }
  static Theory cllb() { return {false, true}; }
  static Theory clb() { return {true, true}; }

  const char* name() const {
    return pro ? (dne ? "CL_b" : "IL_b") : (dne ? "CLL_b" : "ILL");
  }
};

struct Budget {
  int max_depth = 24;
  int max_contractions = 2;   // extra copies of one formula in a context
  int max_inst_terms = 4;     // quantifier instantiation pool cap
  int timeout_ms = 10000;
  bool analytic_cut = false;  // cut on subformulas of hypotheses
};

struct Sequent {
  std::vector<Formula> hyps;
  Formula goal;
};

std::string sequent_to_text(const Sequent& s);
// Alpha-invariant, hypothesis-order-invariant key.
std::string sequent_key(const Sequent& s);

struct ProofNode {
  std::string rule;       // "id", "⊗R", ..., "PRO", "DNE-R", "DNE-L", "AX"
  Sequent seq;            // the conclusion of this node
  Formula principal;      // principal hypothesis for left/structural rules
  Term witness;           // instantiation term (∀L, ∃R) or eigenvariable (∀R, ∃L)
  bool has_principal = false;
  bool has_witness = false;
  std::vector<std::shared_ptr<const ProofNode>> premises;
};
using ProofPtr = std::shared_ptr<const ProofNode>;

std::string proof_to_text(const ProofNode& n);

enum class ProofStatus { Proved, BudgetExhausted, Saturated };

struct ProofResult {
  ProofStatus status;
  ProofPtr tree;  // set iff Proved

  bool proved() const { return status == ProofStatus::Proved; }
};

ProofResult prove(const Sequent& s, const Theory& th, const Budget& b);

// Like prove, but sequents alpha-matching one of the axioms close as "AX"
// leaves.  Used for derived-rule checking.  Axioms are taken up to
// uncurrying: an axiom G |- A -o B also licenses G, A |- B.
ProofResult prove_with_axioms(const Sequent& s, const Theory& th, const Budget& b,
                              const std::vector<Sequent>& axioms);

// The uncurrying closure used by prove_with_axioms and the replay checker.
std::vector<Sequent> axiom_closure(const std::vector<Sequent>& axioms);

struct EquivResult {
  bool equivalent = false;
  ProofPtr forward;   // a |- b
  ProofPtr backward;  // b |- a
};

EquivResult check_equiv(const Formula& a, const Formula& b, const Theory& th, const Budget& b2);

// Batch equivalence checking by congruence decomposition.  Interprovability
// is a congruence for every connective (for ! via promotion), so two
// formulas with the same root are equivalent whenever their corresponding
// subterms are; proof search is only needed at the differing pairs, and the
// checker backs off to the enclosing pair when a subterm pair is not itself
// equivalent (e.g. !(P & P) ~ !(!P & !P) holds although P is not
// equivalent to !P).  Results are memoized, so large batches of
// structurally parallel formulas share the small set of leaf obligations.
class EquivalenceChecker {
 public:
  EquivalenceChecker(const Theory& th, const Budget& direct_budget)
      : th_(th), bud_(direct_budget) {}

  bool equivalent(const Formula& a, const Formula& b);

  // the leaf sequent proofs found by the prover fallback
  const std::vector<ProofPtr>& direct_proofs() const { return proofs_; }

  // Optional fast disproof oracle (e.g. countermodel search).  When it
  // returns true for a direction of a leaf pair the proof search for that
  // pair is skipped entirely; saturating on a non-theorem is far more
  // expensive than refuting it.
  std::function<bool(const Sequent&)> refuter;

 private:
  bool direct(const Formula& a, const Formula& b);
  bool self_promoting(const Formula& f);

  Theory th_;
  Budget bud_;
  std::map<std::string, bool> memo_;
  std::map<std::string, bool> promo_;
  std::vector<ProofPtr> proofs_;
};

// True iff the conclusion is provable when the premise may be used as an
// extra axiom leaf.
bool check_derived_rule(const Sequent& premise, const Sequent& conclusion, const Theory& th,
                        const Budget& b);

}  // namespace illtrans
