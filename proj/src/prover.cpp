#include "prover.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <unordered_map>
#include <unordered_set>

#include "syntax.hpp"

namespace illtrans {

std::string sequent_to_text(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += ", ";
    out += print(s.hyps[i]);
  }
  if (!s.hyps.empty()) out += " ";
  out += "|- ";
  out += print(s.goal);
  return out;
}

std::string sequent_key(const Sequent& s) {
  std::vector<std::string> keys;
  keys.reserve(s.hyps.size());
  for (const Formula& h : s.hyps) keys.push_back(formula_key(h));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const std::string& k : keys) {
    out += k;
    out += "|";
  }
  out += "=>";
  out += formula_key(s.goal);
  return out;
}

static void proof_text_rec(const ProofNode& n, int indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += sequent_to_text(n.seq);
  out += "   [";
  out += n.rule;
  if (n.has_witness) {
    out += " ";
    out += print(n.witness);
  }
  out += "]\n";
  for (const auto& p : n.premises) proof_text_rec(*p, indent + 1, out);
}

std::string proof_to_text(const ProofNode& n) {
  std::string out;
  proof_text_rec(n, 0, out);
  return out;
}

namespace {

struct TimeoutSignal {};

struct Out {
  ProofPtr p;
  bool loop = false;   // failure involved an on-path repeat
  bool limit = false;  // failure involved depth/contraction/pool caps
};

ProofPtr mknode(std::string rule, Sequent seq, std::vector<ProofPtr> premises = {}) {
  auto n = std::make_shared<ProofNode>();
  n->rule = std::move(rule);
  n->seq = std::move(seq);
  n->premises = std::move(premises);
  return n;
}

ProofPtr mknode_p(std::string rule, Sequent seq, Formula principal,
                  std::vector<ProofPtr> premises = {}) {
  auto n = std::make_shared<ProofNode>();
  n->rule = std::move(rule);
  n->seq = std::move(seq);
  n->principal = std::move(principal);
  n->has_principal = true;
  n->premises = std::move(premises);
  return n;
}

ProofPtr mknode_w(std::string rule, Sequent seq, Term witness, std::vector<ProofPtr> premises,
                  const Formula* principal = nullptr) {
  auto n = std::make_shared<ProofNode>();
  n->rule = std::move(rule);
  n->seq = std::move(seq);
  n->witness = std::move(witness);
  n->has_witness = true;
  if (principal) {
    n->principal = *principal;
    n->has_principal = true;
  }
  n->premises = std::move(premises);
  return n;
}

std::vector<Formula> without(const std::vector<Formula>& hyps, size_t i) {
  std::vector<Formula> out;
  out.reserve(hyps.size() - 1);
  for (size_t j = 0; j < hyps.size(); ++j)
    if (j != i) out.push_back(hyps[j]);
  return out;
}

void collect_pool_terms(const Term& t, std::vector<Term>& out) {
  if (t.kind() == Term::Kind::App) {
    for (const Term& a : t.args()) collect_pool_terms(a, out);
    return;
  }
  for (const Term& seen : out)
    if (seen == t) return;
  out.push_back(t);
}

void collect_pool(const Formula& f, std::vector<std::string>& bound, std::vector<Term>& out) {
  switch (f.tag()) {
    case Conn::Atom:
      for (const Term& t : f.atom_args()) {
        if (t.kind() == Term::Kind::Var) {
          bool b = false;
          for (const std::string& v : bound)
            if (v == t.name()) { b = true; break; }
          if (b) continue;
        }
        collect_pool_terms(t, out);
      }
      return;
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      collect_pool(f.left(), bound, out);
      collect_pool(f.right(), bound, out);
      return;
    case Conn::Bang:
      collect_pool(f.right(), bound, out);
      return;
    case Conn::Forall:
    case Conn::Exists:
      bound.push_back(f.var());
      collect_pool(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

class Engine {
public:
  Engine(const Theory& th, const Budget& b, std::vector<Sequent> axioms)
      : th_(th), bud_(b), axioms_(std::move(axioms)) {
    deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(b.timeout_ms);
    for (const Sequent& ax : axioms_) axiom_keys_.push_back(sequent_key(ax));
  }

  ProofResult run(const Sequent& s) {
    // iterative deepening: shallow proofs are found long before the full
    // depth's search space is touched; the failure memo carries over
    try {
      Out out;
      for (int depth = std::min(4, bud_.max_depth);; depth += 4) {
        if (depth > bud_.max_depth) depth = bud_.max_depth;
        out = search(s, depth);
        if (out.p) return {ProofStatus::Proved, out.p};
        if (depth >= bud_.max_depth || !(out.loop || out.limit)) break;
      }
      if (out.loop || out.limit) return {ProofStatus::BudgetExhausted, nullptr};
      return {ProofStatus::Saturated, nullptr};
    } catch (const TimeoutSignal&) {
      return {ProofStatus::BudgetExhausted, nullptr};
    }
  }

private:
  Theory th_;
  Budget bud_;
  std::vector<Sequent> axioms_;
  std::vector<std::string> axiom_keys_;
  std::chrono::steady_clock::time_point deadline_;
  std::unordered_map<std::string, int> failed_;  // depth at failure; INT_MAX = saturated
  std::unordered_map<std::string, ProofPtr> proved_;
  std::unordered_set<std::string> on_path_;
  long long nodes_ = 0;
  int eigen_ctr_ = 0;

  bool discardable(const Formula& f) const { return f.tag() == Conn::Bang || th_.pro; }

  // id / 1R / AX / ⊤R / 0L closures; no search, no depth cost.
  ProofPtr close(const Sequent& s) {
    if (s.goal.tag() == Conn::Top) return mknode("⊤R", s);
    for (size_t i = 0; i < s.hyps.size(); ++i)
      if (s.hyps[i].tag() == Conn::Zero) return mknode_p("0L", s, s.hyps[i]);

    if (!axioms_.empty()) {
      std::string key = sequent_key(s);
      for (size_t a = 0; a < axioms_.size(); ++a)
        if (key == axiom_keys_[a]) return mknode("AX", s);
    }

    auto discard_chain = [&](ProofPtr leaf, const std::vector<Formula>& rest,
                             const Formula& goal) {
      ProofPtr cur = std::move(leaf);
      std::vector<Formula> hyps = cur->seq.hyps;
      for (const Formula& h : rest) {
        hyps.push_back(h);
        Sequent step{hyps, goal};
        const char* rule = h.tag() == Conn::Bang ? "wkn" : "PRO-wkn";
        cur = mknode_p(rule, step, h, {cur});
      }
      return cur;
    };

    if (s.goal.tag() == Conn::One) {
      bool ok = true;
      for (const Formula& h : s.hyps)
        if (!discardable(h)) { ok = false; break; }
      if (ok) {
        ProofPtr leaf = mknode("1R", Sequent{{}, s.goal});
        return discard_chain(leaf, s.hyps, s.goal);
      }
    }

    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (!alpha_eq(s.hyps[i], s.goal)) continue;
      bool ok = true;
      for (size_t j = 0; j < s.hyps.size(); ++j)
        if (j != i && !discardable(s.hyps[j])) { ok = false; break; }
      if (!ok) continue;
      ProofPtr leaf = mknode("id", Sequent{{s.hyps[i]}, s.goal});
      return discard_chain(leaf, without(s.hyps, i), s.goal);
    }
    return nullptr;
  }

  std::vector<Term> pool(const Sequent& s) {
    std::vector<Term> out;
    std::vector<std::string> bound;
    for (const Formula& h : s.hyps) collect_pool(h, bound, out);
    collect_pool(s.goal, bound, out);
    if ((int)out.size() >= bud_.max_inst_terms) out.resize(bud_.max_inst_terms - 1);
    out.push_back(Term::constant("_k1"));
    return out;
  }

  int multiplicity(const std::vector<Formula>& hyps, const Formula& f) {
    std::string key = formula_key(f);
    int n = 0;
    for (const Formula& h : hyps)
      if (formula_key(h) == key) ++n;
    return n;
  }

  Out search(const Sequent& s, int depth) {
    if ((++nodes_ & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw TimeoutSignal{};

    if (ProofPtr p = close(s)) return {p};

    std::string key = sequent_key(s);
    if (auto it = proved_.find(key); it != proved_.end()) return {it->second};
    if (auto it = failed_.find(key); it != failed_.end()) {
      if (it->second == INT_MAX) return {nullptr, false, false};
      if (depth <= it->second) return {nullptr, false, true};
    }
    if (on_path_.count(key)) return {nullptr, true, false};
    if (depth <= 0) return {nullptr, false, true};

    on_path_.insert(key);
    Out out = expand(s, depth);
    on_path_.erase(key);

    if (out.p) {
      proved_[key] = out.p;
    } else if (!out.loop) {
      if (out.limit) {
        int& rec = failed_[key];
        rec = std::max(rec, depth);
      } else {
        failed_[key] = INT_MAX;
      }
    }
    return out;
  }

  Out expand(const Sequent& s, int depth) {
    // Committed invertible left rules: the first applicable one is applied
    // and its outcome is final.
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      const Formula& h = s.hyps[i];
      switch (h.tag()) {
        case Conn::One: {
          Sequent prem{without(s.hyps, i), s.goal};
          Out o = search(prem, depth - 1);
          if (o.p) o.p = mknode_p("1L", s, h, {o.p});
          return o;
        }
        case Conn::Tensor: {
          std::vector<Formula> hyps = without(s.hyps, i);
          hyps.push_back(h.left());
          hyps.push_back(h.right());
          Out o = search({std::move(hyps), s.goal}, depth - 1);
          if (o.p) o.p = mknode_p("⊗L", s, h, {o.p});
          return o;
        }
        case Conn::Plus: {
          std::vector<Formula> hl = without(s.hyps, i);
          std::vector<Formula> hr = hl;
          hl.push_back(h.left());
          hr.push_back(h.right());
          Out a = search({std::move(hl), s.goal}, depth - 1);
          if (!a.p) return a;
          Out b = search({std::move(hr), s.goal}, depth - 1);
          if (!b.p) return b;
          return {mknode_p("⊕L", s, h, {a.p, b.p})};
        }
        case Conn::Exists: {
          std::string v = "_e" + std::to_string(++eigen_ctr_);
          std::vector<Formula> hyps = without(s.hyps, i);
          hyps.push_back(substitute(h.body(), h.var(), Term::var(v)));
          Out o = search({std::move(hyps), s.goal}, depth - 1);
          if (o.p) o.p = mknode_w("∃L", s, Term::var(v), {o.p}, &h);
          return o;
        }
        default:
          break;
      }
    }

    Out acc;
    auto attempt = [&](Out o) {
      if (o.p) {
        acc = std::move(o);
        return true;
      }
      acc.loop |= o.loop;
      acc.limit |= o.limit;
      return false;
    };
    auto sub = [&](Sequent prem) { return search(prem, depth - 1); };
    auto one_premise = [&](Sequent prem, auto make) -> bool {
      Out o = sub(std::move(prem));
      if (o.p) o.p = make(o.p);
      return attempt(std::move(o));
    };

    const Formula& g = s.goal;

    if (g.tag() == Conn::Lolli) {
      std::vector<Formula> hyps = s.hyps;
      hyps.push_back(g.left());
      if (one_premise({std::move(hyps), g.right()},
                      [&](ProofPtr p) { return mknode("⊸R", s, {p}); }))
        return acc;
    }

    if (g.tag() == Conn::With) {
      Out a = sub({s.hyps, g.left()});
      if (a.p) {
        Out b = sub({s.hyps, g.right()});
        if (b.p) return {mknode("&R", s, {a.p, b.p})};
        acc.loop |= b.loop;
        acc.limit |= b.limit;
      } else {
        acc.loop |= a.loop;
        acc.limit |= a.limit;
      }
    }

    if (g.tag() == Conn::Forall) {
      std::string v = "_e" + std::to_string(++eigen_ctr_);
      if (one_premise({s.hyps, substitute(g.body(), g.var(), Term::var(v))},
                      [&](ProofPtr p) { return mknode_w("∀R", s, Term::var(v), {p}); }))
        return acc;
    }

    if (g.tag() == Conn::Bang) {
      bool all_banged = true;
      for (const Formula& h : s.hyps)
        if (h.tag() != Conn::Bang) { all_banged = false; break; }
      if (all_banged &&
          one_premise({s.hyps, g.right()}, [&](ProofPtr p) { return mknode("!R", s, {p}); }))
        return acc;
      if (th_.pro &&
          one_premise({s.hyps, g.right()}, [&](ProofPtr p) { return mknode("PRO", s, {p}); }))
        return acc;
    }

    if (th_.dne) {
      // DNE-L: strip a doubly negated hypothesis
      for (size_t i = 0; i < s.hyps.size(); ++i) {
        Formula inner, core;
        if (match_neg(s.hyps[i], &inner) && match_neg(inner, &core)) {
          std::vector<Formula> hyps = without(s.hyps, i);
          hyps.push_back(core);
          Formula principal = s.hyps[i];
          if (one_premise({std::move(hyps), s.goal}, [&](ProofPtr p) {
                return mknode_p("DNE-L", s, principal, {p});
              }))
            return acc;
        }
      }
    }

    if (g.tag() == Conn::Plus) {
      if (one_premise({s.hyps, g.left()}, [&](ProofPtr p) { return mknode("⊕R", s, {p}); }))
        return acc;
      if (one_premise({s.hyps, g.right()}, [&](ProofPtr p) { return mknode("⊕R", s, {p}); }))
        return acc;
    }

    if (g.tag() == Conn::Exists) {
      for (const Term& t : pool(s)) {
        if (one_premise({s.hyps, substitute(g.body(), g.var(), t)},
                        [&](ProofPtr p) { return mknode_w("∃R", s, t, {p}); }))
          return acc;
      }
    }

    if (g.tag() == Conn::Tensor) {
      if (split_rule(s, depth, acc)) return acc;
    }

    // &L
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (s.hyps[i].tag() != Conn::With) continue;
      const Formula h = s.hyps[i];
      for (int side = 0; side < 2; ++side) {
        std::vector<Formula> hyps = without(s.hyps, i);
        hyps.push_back(side == 0 ? h.left() : h.right());
        if (one_premise({std::move(hyps), s.goal},
                        [&](ProofPtr p) { return mknode_p("&L", s, h, {p}); }))
          return acc;
      }
    }

    // !L
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (s.hyps[i].tag() != Conn::Bang) continue;
      const Formula h = s.hyps[i];
      std::vector<Formula> hyps = without(s.hyps, i);
      hyps.push_back(h.right());
      if (one_premise({std::move(hyps), s.goal},
                      [&](ProofPtr p) { return mknode_p("!L", s, h, {p}); }))
        return acc;
    }

    // ⊸L
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (s.hyps[i].tag() != Conn::Lolli) continue;
      if (lolli_left(s, i, depth, acc)) return acc;
    }

    // ∀L
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (s.hyps[i].tag() != Conn::Forall) continue;
      const Formula h = s.hyps[i];
      for (const Term& t : pool(s)) {
        std::vector<Formula> hyps = without(s.hyps, i);
        hyps.push_back(substitute(h.body(), h.var(), t));
        if (one_premise({std::move(hyps), s.goal},
                        [&](ProofPtr p) { return mknode_w("∀L", s, t, {p}, &h); }))
          return acc;
      }
    }

    // con (bounded by multiplicity)
    for (size_t i = 0; i < s.hyps.size(); ++i) {
      if (s.hyps[i].tag() != Conn::Bang) continue;
      if (multiplicity(s.hyps, s.hyps[i]) > bud_.max_contractions) {
        acc.limit = true;
        continue;
      }
      std::vector<Formula> hyps = s.hyps;
      hyps.push_back(s.hyps[i]);
      const Formula h = s.hyps[i];
      if (one_premise({std::move(hyps), s.goal},
                      [&](ProofPtr p) { return mknode_p("con", s, h, {p}); }))
        return acc;
    }

    // structural contraction on arbitrary hypotheses (pro only)
    if (th_.pro) {
      for (size_t i = 0; i < s.hyps.size(); ++i) {
        if (s.hyps[i].tag() == Conn::Bang) continue;  // handled by con
        if (multiplicity(s.hyps, s.hyps[i]) > bud_.max_contractions) {
          acc.limit = true;
          continue;
        }
        std::vector<Formula> hyps = s.hyps;
        hyps.push_back(s.hyps[i]);
        const Formula h = s.hyps[i];
        if (one_premise({std::move(hyps), s.goal},
                        [&](ProofPtr p) { return mknode_p("PRO-con", s, h, {p}); }))
          return acc;
      }
    }

    if (th_.dne && !match_neg(g, nullptr)) {
      if (one_premise({s.hyps, neg(neg(g))},
                      [&](ProofPtr p) { return mknode("DNE-R", s, {p}); }))
        return acc;
    }

    if (bud_.analytic_cut) {
      if (analytic_cut(s, depth, acc)) return acc;
    }

    return acc;
  }

  // ⊗R: enumerate context splits
  bool split_rule(const Sequent& s, int depth, Out& acc) {
    size_t n = s.hyps.size();
    if (n > 14) {
      acc.limit = true;
      return false;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Formula> lh, rh;
      for (size_t j = 0; j < n; ++j)
        (mask >> j & 1 ? lh : rh).push_back(s.hyps[j]);
      Out a = search({std::move(lh), s.goal.left()}, depth - 1);
      if (!a.p) {
        acc.loop |= a.loop;
        acc.limit |= a.limit;
        continue;
      }
      Out b = search({std::move(rh), s.goal.right()}, depth - 1);
      if (!b.p) {
        acc.loop |= b.loop;
        acc.limit |= b.limit;
        continue;
      }
      acc = {mknode("⊗R", s, {a.p, b.p})};
      return true;
    }
    return false;
  }

  bool lolli_left(const Sequent& s, size_t i, int depth, Out& acc) {
    const Formula h = s.hyps[i];
    std::vector<Formula> rest = without(s.hyps, i);
    size_t n = rest.size();
    if (n > 14) {
      acc.limit = true;
      return false;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Formula> lh, rh;
      for (size_t j = 0; j < n; ++j)
        (mask >> j & 1 ? lh : rh).push_back(rest[j]);
      Out a = search({std::move(lh), h.left()}, depth - 1);
      if (!a.p) {
        acc.loop |= a.loop;
        acc.limit |= a.limit;
        continue;
      }
      rh.push_back(h.right());
      Out b = search({std::move(rh), s.goal}, depth - 1);
      if (!b.p) {
        acc.loop |= b.loop;
        acc.limit |= b.limit;
        continue;
      }
      acc = {mknode_p("⊸L", s, h, {a.p, b.p})};
      return true;
    }
    return false;
  }

  bool analytic_cut(const Sequent& s, int depth, Out& acc) {
    std::vector<Formula> cuts;
    std::vector<std::string> seen;
    struct Collect {
      static void run(const Formula& f, std::vector<Formula>& cuts,
                      std::vector<std::string>& seen) {
        std::string k = formula_key(f);
        for (const std::string& s2 : seen)
          if (s2 == k) return;
        seen.push_back(k);
        cuts.push_back(f);
        switch (f.tag()) {
          case Conn::Tensor:
          case Conn::With:
          case Conn::Plus:
          case Conn::Lolli:
            run(f.left(), cuts, seen);
            run(f.right(), cuts, seen);
            break;
          case Conn::Bang:
            run(f.right(), cuts, seen);
            break;
          case Conn::Forall:
          case Conn::Exists:
            run(f.body(), cuts, seen);
            break;
          default:
            break;
        }
      }
    };
    for (const Formula& h : s.hyps) Collect::run(h, cuts, seen);

    size_t n = s.hyps.size();
    if (n > 14) {
      acc.limit = true;
      return false;
    }
    for (const Formula& c : cuts) {
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Formula> lh, rh;
        for (size_t j = 0; j < n; ++j)
          (mask >> j & 1 ? lh : rh).push_back(s.hyps[j]);
        Out a = search({std::move(lh), c}, depth - 1);
        if (!a.p) {
          acc.loop |= a.loop;
          acc.limit |= a.limit;
          continue;
        }
        rh.push_back(c);
        Out b = search({std::move(rh), s.goal}, depth - 1);
        if (!b.p) {
          acc.loop |= b.loop;
          acc.limit |= b.limit;
          continue;
        }
        acc = {mknode("cut", s, {a.p, b.p})};
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<Sequent> axiom_closure(const std::vector<Sequent>& axioms) {
  std::vector<Sequent> out;
  for (const Sequent& ax : axioms) {
    Sequent cur = ax;
    out.push_back(cur);
    while (cur.goal.tag() == Conn::Lolli) {
      cur.hyps.push_back(cur.goal.left());
      cur.goal = cur.goal.right();
      out.push_back(cur);
    }
  }
  return out;
}

ProofResult prove(const Sequent& s, const Theory& th, const Budget& b) {
  return Engine(th, b, {}).run(s);
}

ProofResult prove_with_axioms(const Sequent& s, const Theory& th, const Budget& b,
                              const std::vector<Sequent>& axioms) {
  return Engine(th, b, axiom_closure(axioms)).run(s);
}

EquivResult check_equiv(const Formula& a, const Formula& b, const Theory& th, const Budget& bud) {
  EquivResult r;
  ProofResult fwd = prove({{a}, b}, th, bud);
  if (!fwd.proved()) return r;
  ProofResult bwd = prove({{b}, a}, th, bud);
  if (!bwd.proved()) return r;
  r.equivalent = true;
  r.forward = fwd.tree;
  r.backward = bwd.tree;
  return r;
}

bool check_derived_rule(const Sequent& premise, const Sequent& conclusion, const Theory& th,
                        const Budget& b) {
  return prove_with_axioms(conclusion, th, b, {premise}).proved();
}

bool EquivalenceChecker::direct(const Formula& a, const Formula& b) {
  std::string key = formula_key(a) < formula_key(b)
                        ? formula_key(a) + "\x01" + formula_key(b)
                        : formula_key(b) + "\x01" + formula_key(a);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (refuter && (refuter({{a}, b}) || refuter({{b}, a}))) {
    memo_.emplace(std::move(key), false);
    return false;
  }
  EquivResult e = check_equiv(a, b, th_, bud_);
  if (e.equivalent) {
    proofs_.push_back(e.forward);
    proofs_.push_back(e.backward);
  }
  memo_.emplace(std::move(key), e.equivalent);
  return e.equivalent;
}

bool EquivalenceChecker::equivalent(const Formula& a, const Formula& b) {
  if (formula_key(a) == formula_key(b)) return true;
  if (a.tag() == b.tag()) {
    bool split_ok = false;
    switch (a.tag()) {
      case Conn::Tensor:
      case Conn::With:
      case Conn::Plus:
      case Conn::Lolli:
        split_ok = equivalent(a.left(), b.left()) && equivalent(a.right(), b.right());
        break;
      case Conn::Bang:
        split_ok = equivalent(a.right(), b.right());
        break;
      case Conn::Forall:
      case Conn::Exists:
        split_ok = a.var() == b.var() && equivalent(a.body(), b.body());
        break;
      default:
        break;
    }
    if (split_ok) return true;
  }
  // !X ~ Y follows from X ~ Y plus Y |- !Y: the forward direction is
  // dereliction, and Y |- !Y with Y |- X under a banged context gives
  // !Y |- !X by promotion.  This peels the marker bangs the translations
  // stack on top of already-banged material.
  if (a.tag() == Conn::Bang && b.tag() != Conn::Bang && equivalent(a.right(), b) &&
      self_promoting(b))
    return true;
  if (b.tag() == Conn::Bang && a.tag() != Conn::Bang && equivalent(b.right(), a) &&
      self_promoting(a))
    return true;
  return direct(a, b);
}

bool EquivalenceChecker::self_promoting(const Formula& f) {
  std::string key = formula_key(f);
  auto it = promo_.find(key);
  if (it != promo_.end()) return it->second;
  if (refuter && refuter({{f}, Formula::bang(f)})) {
    promo_.emplace(std::move(key), false);
    return false;
  }
  ProofResult r = prove({{f}, Formula::bang(f)}, th_, bud_);
  if (r.proved()) proofs_.push_back(r.tree);
  promo_.emplace(std::move(key), r.proved());
  return r.proved();
}

}  // namespace illtrans
