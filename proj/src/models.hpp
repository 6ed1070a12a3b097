#pragma once

// Finite algebraic countermodels: bounded commutative integral residuated
// lattices carrying a storage operator interpreting !.
//
// Elements are 0..n-1 with 0 the bottom and n-1 both the top and the
// monoidal unit, so the constants 1 and top coincide and 0 is interpreted
// as the lattice bottom.  The labeling is a linear extension of the order.
// The ! tables satisfy !a <= a, !!a = !a, !top = top, monotonicity and
// !(a /\ b) = !a * !b, which makes every ILL rule (promotion included)
// order-sound.  The pro theory forces ! = id and * = /\ (a Heyting
// algebra); dne additionally forces ~~a = a.
//
// Quantifiers are interpreted over a finite domain as iterated meets and
// joins.  A failed search is never a proof of derivability; it is reported
// as NotFoundWithinBounds.

#include <map>
#include <string>
#include <vector>

#include "prover.hpp"

namespace illtrans {

struct Algebra {
  int n = 0;
  std::vector<uint8_t> leq_;                 // n*n, row-major
  std::vector<uint8_t> meet_, join_, ten_, imp_;  // n*n
  std::vector<uint8_t> bang_;                // n

  int top() const { return n - 1; }
  bool leq(int a, int b) const { return leq_[a * n + b]; }
  int meet(int a, int b) const { return meet_[a * n + b]; }
  int join(int a, int b) const { return join_[a * n + b]; }
  int ten(int a, int b) const { return ten_[a * n + b]; }
  int imp(int a, int b) const { return imp_[a * n + b]; }
  int bang(int a) const { return bang_[a]; }
};

// Re-checks every law from scratch (independent of the enumerator).
bool algebra_valid(const Algebra& alg, const Theory& th, std::string* why = nullptr);

// All algebras of exactly size n for the theory; deterministic order.
// Results are cached per (n, pro, dne).
const std::vector<Algebra>& enumerate_algebras(int n, const Theory& th);

struct ModelBounds {
  int max_algebra = 6;
  int max_domain = 3;
  int timeout_ms = 30000;
};

struct Valuation {
  int domain = 1;
  // atom name -> value table indexed by the argument tuple in mixed radix
  // (first argument most significant); arity from the formula.
  std::map<std::string, std::vector<int>> atoms;
  std::map<std::string, int> consts;
};

// a: value of the formula; fails (returns false) only if the formula uses
// compound terms as atom arguments, which the finite search does not cover.
bool eval_formula(const Formula& f, const Algebra& alg, const Valuation& v,
                  std::map<std::string, int>& env, int* out);

struct Countermodel {
  Algebra algebra;
  Valuation valuation;
  // For equivalence refutations: 0 = left |- right fails, 1 = right |- left.
  int direction = 0;
  std::string text() const;
};

enum class SearchVerdict { Found, NotFoundWithinBounds };

struct RefuteResult {
  SearchVerdict verdict = SearchVerdict::NotFoundWithinBounds;
  Countermodel cm;  // meaningful iff Found; re-validated before returning
  bool found() const { return verdict == SearchVerdict::Found; }
};

// Countermodel to the sequent: a point where the tensor of the hypotheses
// is not below the goal.
RefuteResult find_countermodel(const Sequent& s, const Theory& th, const ModelBounds& b);

// Countermodel to a |- b or to b |- a (direction recorded).
RefuteResult find_countermodel_equiv(const Formula& a, const Formula& b, const Theory& th,
                                     const ModelBounds& b2);

}  // namespace illtrans
