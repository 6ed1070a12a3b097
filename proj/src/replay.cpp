#include "replay.hpp"

#include <algorithm>

#include "syntax.hpp"

namespace illtrans {

namespace {

using Keys = std::vector<std::string>;

Keys keys_of(const std::vector<Formula>& hyps) {
  Keys out;
  out.reserve(hyps.size());
  for (const Formula& f : hyps) out.push_back(formula_key(f));
  std::sort(out.begin(), out.end());
  return out;
}

// Removes one occurrence of k; false if absent.
bool remove_one(Keys& ks, const std::string& k) {
  auto it = std::lower_bound(ks.begin(), ks.end(), k);
  if (it == ks.end() || *it != k) return false;
  ks.erase(it);
  return true;
}

void add_one(Keys& ks, const std::string& k) {
  ks.insert(std::lower_bound(ks.begin(), ks.end(), k), k);
}

Keys merged(Keys a, const Keys& b) {
  for (const std::string& k : b) add_one(a, k);
  return a;
}

struct Checker {
  Theory th;
  std::vector<std::string> axiom_keys;
  std::string reason;

  bool fail(const ProofNode& n, const std::string& why) {
    reason = "[" + n.rule + "] " + why + "  at: " + sequent_to_text(n.seq);
    return false;
  }

  bool var_fresh(const ProofNode& n, const std::string& v) {
    for (const Formula& h : n.seq.hyps)
      if (free_vars(h).count(v)) return false;
    return !free_vars(n.seq.goal).count(v);
  }

  bool check(const ProofNode& n) {
    for (const auto& p : n.premises)
      if (!check(*p)) return false;

    const Sequent& s = n.seq;
    Keys hk = keys_of(s.hyps);
    std::string gk = formula_key(s.goal);
    auto arity = [&](size_t k) { return n.premises.size() == k; };
    auto prem = [&](size_t i) -> const Sequent& { return n.premises[i]->seq; };
    auto need_principal = [&]() { return n.has_principal; };
    auto principal_present = [&](Keys& rest) {
      rest = hk;
      return n.has_principal && remove_one(rest, formula_key(n.principal));
    };

    if (n.rule == "id") {
      if (!arity(0)) return fail(n, "leaf expected");
      if (s.hyps.size() != 1 || !alpha_eq(s.hyps[0], s.goal))
        return fail(n, "not of the form A |- A");
      return true;
    }
    if (n.rule == "⊤R") {
      if (!arity(0) || s.goal.tag() != Conn::Top) return fail(n, "goal must be top");
      return true;
    }
    if (n.rule == "0L") {
      Keys rest;
      if (!arity(0) || !need_principal() || n.principal.tag() != Conn::Zero ||
          !principal_present(rest))
        return fail(n, "no 0 hypothesis");
      return true;
    }
    if (n.rule == "1R") {
      if (!arity(0) || !s.hyps.empty() || s.goal.tag() != Conn::One)
        return fail(n, "not of the form |- 1");
      return true;
    }
    if (n.rule == "AX") {
      if (!arity(0)) return fail(n, "leaf expected");
      std::string key = sequent_key(s);
      for (const std::string& ak : axiom_keys)
        if (ak == key) return true;
      return fail(n, "sequent is not an axiom");
    }
    if (n.rule == "1L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::One || !principal_present(rest))
        return fail(n, "no 1 hypothesis");
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "⊗R") {
      if (!arity(2) || s.goal.tag() != Conn::Tensor) return fail(n, "goal must be a tensor");
      if (!alpha_eq(prem(0).goal, s.goal.left()) || !alpha_eq(prem(1).goal, s.goal.right()))
        return fail(n, "premise goals mismatch");
      if (merged(keys_of(prem(0).hyps), keys_of(prem(1).hyps)) != hk)
        return fail(n, "context split mismatch");
      return true;
    }
    if (n.rule == "⊗L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::Tensor || !principal_present(rest))
        return fail(n, "no such tensor hypothesis");
      add_one(rest, formula_key(n.principal.left()));
      add_one(rest, formula_key(n.principal.right()));
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "⊸R") {
      if (!arity(1) || s.goal.tag() != Conn::Lolli) return fail(n, "goal must be -o");
      Keys want = hk;
      add_one(want, formula_key(s.goal.left()));
      if (keys_of(prem(0).hyps) != want || !alpha_eq(prem(0).goal, s.goal.right()))
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "⊸L") {
      Keys rest;
      if (!arity(2) || n.principal.tag() != Conn::Lolli || !principal_present(rest))
        return fail(n, "no such -o hypothesis");
      if (!alpha_eq(prem(0).goal, n.principal.left()))
        return fail(n, "first premise must prove the antecedent");
      if (formula_key(prem(1).goal) != gk) return fail(n, "second premise goal mismatch");
      Keys rh = keys_of(prem(1).hyps);
      if (!remove_one(rh, formula_key(n.principal.right())))
        return fail(n, "consequent missing from second premise");
      if (merged(keys_of(prem(0).hyps), rh) != rest) return fail(n, "context split mismatch");
      return true;
    }
    if (n.rule == "&R") {
      if (!arity(2) || s.goal.tag() != Conn::With) return fail(n, "goal must be &");
      if (!alpha_eq(prem(0).goal, s.goal.left()) || !alpha_eq(prem(1).goal, s.goal.right()))
        return fail(n, "premise goals mismatch");
      if (keys_of(prem(0).hyps) != hk || keys_of(prem(1).hyps) != hk)
        return fail(n, "contexts must match the conclusion");
      return true;
    }
    if (n.rule == "&L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::With || !principal_present(rest))
        return fail(n, "no such & hypothesis");
      Keys a = rest, b = rest;
      add_one(a, formula_key(n.principal.left()));
      add_one(b, formula_key(n.principal.right()));
      Keys got = keys_of(prem(0).hyps);
      if ((got != a && got != b) || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "⊕R") {
      if (!arity(1) || s.goal.tag() != Conn::Plus) return fail(n, "goal must be +");
      if (!alpha_eq(prem(0).goal, s.goal.left()) && !alpha_eq(prem(0).goal, s.goal.right()))
        return fail(n, "premise goal is neither disjunct");
      if (keys_of(prem(0).hyps) != hk) return fail(n, "context mismatch");
      return true;
    }
    if (n.rule == "⊕L") {
      Keys rest;
      if (!arity(2) || n.principal.tag() != Conn::Plus || !principal_present(rest))
        return fail(n, "no such + hypothesis");
      Keys a = rest, b = rest;
      add_one(a, formula_key(n.principal.left()));
      add_one(b, formula_key(n.principal.right()));
      if (keys_of(prem(0).hyps) != a || keys_of(prem(1).hyps) != b ||
          formula_key(prem(0).goal) != gk || formula_key(prem(1).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "∀R") {
      if (!arity(1) || s.goal.tag() != Conn::Forall || !n.has_witness ||
          n.witness.kind() != Term::Kind::Var)
        return fail(n, "needs a forall goal and an eigenvariable");
      if (!var_fresh(n, n.witness.name())) return fail(n, "eigenvariable not fresh");
      if (keys_of(prem(0).hyps) != hk ||
          !alpha_eq(prem(0).goal, substitute(s.goal.body(), s.goal.var(), n.witness)))
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "∀L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::Forall || !principal_present(rest) ||
          !n.has_witness)
        return fail(n, "no such forall hypothesis");
      add_one(rest, formula_key(substitute(n.principal.body(), n.principal.var(), n.witness)));
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "∃R") {
      if (!arity(1) || s.goal.tag() != Conn::Exists || !n.has_witness)
        return fail(n, "needs an exists goal and a witness");
      if (keys_of(prem(0).hyps) != hk ||
          !alpha_eq(prem(0).goal, substitute(s.goal.body(), s.goal.var(), n.witness)))
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "∃L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::Exists || !principal_present(rest) ||
          !n.has_witness || n.witness.kind() != Term::Kind::Var)
        return fail(n, "no such exists hypothesis");
      if (!var_fresh(n, n.witness.name())) return fail(n, "eigenvariable not fresh");
      add_one(rest, formula_key(substitute(n.principal.body(), n.principal.var(), n.witness)));
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "con" || n.rule == "PRO-con") {
      Keys rest;
      if (!arity(1) || !principal_present(rest)) return fail(n, "no such hypothesis");
      if (n.rule == "con" && n.principal.tag() != Conn::Bang)
        return fail(n, "contraction needs a banged hypothesis");
      if (n.rule == "PRO-con" && !th.pro) return fail(n, "theory lacks pro");
      Keys want = hk;
      add_one(want, formula_key(n.principal));
      if (keys_of(prem(0).hyps) != want || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "wkn" || n.rule == "PRO-wkn") {
      Keys rest;
      if (!arity(1) || !principal_present(rest)) return fail(n, "no such hypothesis");
      if (n.rule == "wkn" && n.principal.tag() != Conn::Bang)
        return fail(n, "weakening needs a banged hypothesis");
      if (n.rule == "PRO-wkn" && !th.pro) return fail(n, "theory lacks pro");
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "!R") {
      if (!arity(1) || s.goal.tag() != Conn::Bang) return fail(n, "goal must be banged");
      for (const Formula& h : s.hyps)
        if (h.tag() != Conn::Bang) return fail(n, "promotion context must be banged");
      if (keys_of(prem(0).hyps) != hk || !alpha_eq(prem(0).goal, s.goal.right()))
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "!L") {
      Keys rest;
      if (!arity(1) || n.principal.tag() != Conn::Bang || !principal_present(rest))
        return fail(n, "no such banged hypothesis");
      add_one(rest, formula_key(n.principal.right()));
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "PRO") {
      if (!th.pro) return fail(n, "theory lacks pro");
      if (!arity(1) || s.goal.tag() != Conn::Bang) return fail(n, "goal must be banged");
      if (keys_of(prem(0).hyps) != hk || !alpha_eq(prem(0).goal, s.goal.right()))
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "DNE-R") {
      if (!th.dne) return fail(n, "theory lacks dne");
      if (!arity(1) || keys_of(prem(0).hyps) != hk ||
          !alpha_eq(prem(0).goal, neg(neg(s.goal))))
        return fail(n, "premise must prove the double negation of the goal");
      return true;
    }
    if (n.rule == "DNE-L") {
      Keys rest;
      if (!th.dne) return fail(n, "theory lacks dne");
      Formula inner, core;
      if (!arity(1) || !principal_present(rest) || !match_neg(n.principal, &inner) ||
          !match_neg(inner, &core))
        return fail(n, "no doubly negated hypothesis");
      add_one(rest, formula_key(core));
      if (keys_of(prem(0).hyps) != rest || formula_key(prem(0).goal) != gk)
        return fail(n, "premise mismatch");
      return true;
    }
    if (n.rule == "cut") {
      if (!arity(2) || formula_key(prem(1).goal) != gk) return fail(n, "goal mismatch");
      Keys rh = keys_of(prem(1).hyps);
      if (!remove_one(rh, formula_key(prem(0).goal)))
        return fail(n, "cut formula missing from second premise");
      if (merged(keys_of(prem(0).hyps), rh) != hk) return fail(n, "context split mismatch");
      return true;
    }
    return fail(n, "unknown rule");
  }
};

}  // namespace

ReplayResult replay_check(const ProofNode& root, const Theory& th,
                          const std::vector<Sequent>& axioms) {
  Checker c;
  c.th = th;
  for (const Sequent& ax : axiom_closure(axioms)) c.axiom_keys.push_back(sequent_key(ax));
  if (c.check(root)) return {true, ""};
  return {false, c.reason};
}

}  // namespace illtrans
