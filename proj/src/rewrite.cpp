#include "rewrite.hpp"

#include <map>
#include <stdexcept>

#include "xlate.hpp"

namespace illtrans {

namespace {

bool is_metavar(const Formula& f) {
  return f.tag() == Conn::Atom && f.atom_args().empty() &&
         (f.atom_name() == "A" || f.atom_name() == "B");
}

struct MatchEnv {
  std::map<std::string, Formula> metas;
  std::vector<std::pair<std::string, std::string>> binders;  // pattern var -> subject var

  const std::string* subject_binder(const std::string& pattern_var) const {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      if (it->first == pattern_var) return &it->second;
    return nullptr;
  }
};

bool match(const Formula& pat, const Formula& f, MatchEnv& env) {
  if (is_metavar(pat)) {
    auto it = env.metas.find(pat.atom_name());
    if (it != env.metas.end()) return it->second == f;
    env.metas.emplace(pat.atom_name(), f);
    return true;
  }
  if (pat.tag() != f.tag()) return false;
  switch (pat.tag()) {
    case Conn::Atom:
      return pat.atom_name() == f.atom_name() && pat.atom_args() == f.atom_args();
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return true;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return match(pat.left(), f.left(), env) && match(pat.right(), f.right(), env);
    case Conn::Bang:
      return match(pat.right(), f.right(), env);
    case Conn::Forall:
    case Conn::Exists: {
      env.binders.emplace_back(pat.var(), f.var());
      bool ok = match(pat.body(), f.body(), env);
      // keep the binding for rhs instantiation; matching is over by the
      // time instantiate runs, so stale inner entries are harmless (the
      // rhs replays the same binder structure)
      if (!ok) env.binders.pop_back();
      return ok;
    }
  }
  return false;
}

Formula instantiate(const Formula& rhs, const MatchEnv& env) {
  if (is_metavar(rhs)) {
    auto it = env.metas.find(rhs.atom_name());
    if (it == env.metas.end()) throw std::logic_error("unbound metavariable in rhs");
    return it->second;
  }
  switch (rhs.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return rhs;
    case Conn::Tensor:
      return Formula::tensor(instantiate(rhs.left(), env), instantiate(rhs.right(), env));
    case Conn::With:
      return Formula::with(instantiate(rhs.left(), env), instantiate(rhs.right(), env));
    case Conn::Plus:
      return Formula::plus(instantiate(rhs.left(), env), instantiate(rhs.right(), env));
    case Conn::Lolli:
      return Formula::lolli(instantiate(rhs.left(), env), instantiate(rhs.right(), env));
    case Conn::Bang:
      return Formula::bang(instantiate(rhs.right(), env));
    case Conn::Forall:
    case Conn::Exists: {
      const std::string* sv = env.subject_binder(rhs.var());
      std::string v = sv ? *sv : rhs.var();
      Formula body = instantiate(rhs.body(), env);
      return rhs.tag() == Conn::Forall ? Formula::forall(v, body) : Formula::exists(v, body);
    }
  }
  throw std::logic_error("bad tag");
}

// at most one rule fires per visited position
bool try_rules(const Formula& f, const std::vector<ReductionRule>& rules, Formula* out,
               const ReductionRule** fired) {
  for (const ReductionRule& r : rules) {
    MatchEnv env;
    if (match(r.lhs, f, env)) {
      *out = instantiate(r.rhs, env);
      if (fired) *fired = &r;
      return true;
    }
  }
  return false;
}

struct Walker {
  const std::vector<ReductionRule>& rules;
  Strategy strategy;
  std::vector<TraceEntry>* trace;

  Formula children(const Formula& f, const std::string& path) {
    switch (f.tag()) {
      case Conn::Atom:
      case Conn::Top:
      case Conn::Zero:
      case Conn::One:
        return f;
      case Conn::Tensor:
        return Formula::tensor(walk(f.left(), path + "l."), walk(f.right(), path + "r."));
      case Conn::With:
        return Formula::with(walk(f.left(), path + "l."), walk(f.right(), path + "r."));
      case Conn::Plus:
        return Formula::plus(walk(f.left(), path + "l."), walk(f.right(), path + "r."));
      case Conn::Lolli:
        return Formula::lolli(walk(f.left(), path + "l."), walk(f.right(), path + "r."));
      case Conn::Bang:
        return Formula::bang(walk(f.right(), path + "b."));
      case Conn::Forall:
        return Formula::forall(f.var(), walk(f.body(), path + "b."));
      case Conn::Exists:
        return Formula::exists(f.var(), walk(f.body(), path + "b."));
    }
    throw std::logic_error("bad tag");
  }

  Formula walk(const Formula& f, const std::string& path) {
    if (strategy == Strategy::Outside) {
      Formula replaced;
      const ReductionRule* fired = nullptr;
      if (try_rules(f, rules, &replaced, &fired)) {
        record(path, *fired, f, replaced);
        return children(replaced, path);
      }
      return children(f, path);
    }
    Formula rebuilt = children(f, path);
    Formula replaced;
    const ReductionRule* fired = nullptr;
    if (try_rules(rebuilt, rules, &replaced, &fired)) {
      record(path, *fired, rebuilt, replaced);
      return replaced;
    }
    return rebuilt;
  }

  void record(const std::string& path, const ReductionRule& r, const Formula& before,
              const Formula& after) {
    if (!trace) return;
    std::string p = path;
    if (!p.empty()) p.pop_back();  // drop trailing '.'
    trace->push_back({p, r.name, before, after});
  }
};

}  // namespace

Formula apply(const Formula& a, const std::vector<ReductionRule>& rules, Strategy s,
              std::vector<TraceEntry>* trace) {
  Walker w{rules, s, trace};
  return w.walk(a, "");
}

// ---------------------------------------------------------------------------
// The named simplifications

namespace {

const Formula MA = Formula::atom("A");
const Formula MB = Formula::atom("B");

Formula nn(const Formula& f) { return neg(neg(f)); }

ReductionRule rule(const char* name, Formula lhs, Formula rhs) {
  return ReductionRule{std::move(lhs), std::move(rhs), name};
}

std::vector<ReductionRule> build_rules(SimplificationId id) {
  using F = Formula;
  switch (id) {
    case SimplificationId::GGfromKolmO:
      return {
          rule("drop-nn-with", nn(F::with(nn(MA), nn(MB))), F::with(nn(MA), nn(MB))),
          rule("drop-nn-tensor", nn(F::tensor(nn(MA), nn(MB))), F::tensor(nn(MA), nn(MB))),
          rule("drop-nn-lolli", nn(F::lolli(nn(MA), nn(MB))), F::lolli(nn(MA), nn(MB))),
          rule("drop-nn-forall", nn(F::forall("x", nn(MA))), F::forall("x", nn(MA))),
          rule("drop-nn-bang", nn(F::bang(nn(MA))), F::bang(nn(MA))),
      };
    case SimplificationId::KurodaFromKolmI:
      return {
          rule("fuse-nn-tensor", nn(F::tensor(nn(MA), nn(MB))), nn(F::tensor(MA, MB))),
          rule("fuse-nn-with", nn(F::with(nn(MA), nn(MB))), nn(F::with(MA, MB))),
          rule("fuse-nn-plus", nn(F::plus(nn(MA), nn(MB))), nn(F::plus(MA, MB))),
          rule("fuse-nn-lolli", nn(F::lolli(nn(MA), nn(MB))), nn(F::lolli(MA, MB))),
          rule("fuse-nn-exists", nn(F::exists("x", nn(MA))), nn(F::exists("x", MA))),
          rule("fuse-nn-bang", nn(F::bang(nn(MA))), nn(F::bang(MA))),
      };
    case SimplificationId::StarFromGfO:
      return {
          rule("drop-bang-tensor", F::bang(F::tensor(F::bang(MA), F::bang(MB))),
               F::tensor(F::bang(MA), F::bang(MB))),
          rule("drop-bang-plus", F::bang(F::plus(F::bang(MA), F::bang(MB))),
               F::plus(F::bang(MA), F::bang(MB))),
          rule("drop-bang-exists", F::bang(F::exists("x", F::bang(MA))),
               F::exists("x", F::bang(MA))),
          rule("drop-bang-bang", F::bang(F::bang(F::bang(MA))), F::bang(F::bang(MA))),
      };
    case SimplificationId::CircFromGfI:
      return {
          rule("fuse-bang-with", F::bang(F::with(F::bang(MA), F::bang(MB))),
               F::bang(F::with(MA, MB))),
          rule("fuse-bang-lolli", F::bang(F::lolli(F::bang(MA), F::bang(MB))),
               F::bang(F::lolli(F::bang(MA), MB))),
          rule("fuse-bang-forall", F::bang(F::forall("x", F::bang(MA))),
               F::bang(F::forall("x", MA))),
          rule("fuse-bang-bang", F::bang(F::bang(F::bang(MA))), F::bang(F::bang(MA))),
      };
    case SimplificationId::LinGGfromKolmO:
      return {
          rule("drop-nn-with", nn(F::with(nn(MA), nn(MB))), F::with(nn(MA), nn(MB))),
          rule("drop-nn-lolli", nn(F::lolli(nn(MA), nn(MB))), F::lolli(nn(MA), nn(MB))),
          rule("drop-nn-forall", nn(F::forall("x", nn(MA))), F::forall("x", nn(MA))),
      };
    case SimplificationId::LinKurodaFromKolmI:
      return {
          rule("fuse-nn-tensor", nn(F::tensor(nn(MA), nn(MB))), nn(F::tensor(MA, MB))),
          rule("fuse-nn-plus", nn(F::plus(nn(MA), nn(MB))), nn(F::plus(MA, MB))),
          rule("halve-nn-lolli", nn(F::lolli(nn(MA), nn(MB))), nn(F::lolli(MA, nn(MB)))),
          rule("fuse-nn-exists", nn(F::exists("x", nn(MA))), nn(F::exists("x", MA))),
      };
  }
  throw std::logic_error("bad simplification id");
}

struct SimpEntry {
  SimplificationId id;
  const char* name;
};

constexpr SimpEntry kSimpNames[] = {
    {SimplificationId::GGfromKolmO, "gg-from-kolm-outer"},
    {SimplificationId::KurodaFromKolmI, "kuroda-from-kolm-inner"},
    {SimplificationId::StarFromGfO, "star-from-gf-outer"},
    {SimplificationId::CircFromGfI, "circ-from-gf-inner"},
    {SimplificationId::LinGGfromKolmO, "lgg-from-kolm-outer"},
    {SimplificationId::LinKurodaFromKolmI, "lkuroda-from-kolm-inner"},
};

}  // namespace

const char* simplification_name(SimplificationId id) {
  for (const auto& e : kSimpNames)
    if (e.id == id) return e.name;
  return "?";
}

bool simplification_from_name(const std::string& name, SimplificationId* out) {
  for (const auto& e : kSimpNames) {
    if (name == e.name) {
      *out = e.id;
      return true;
    }
  }
  return false;
}

const std::vector<ReductionRule>& rules_for(SimplificationId id) {
  static const std::vector<ReductionRule> tables[] = {
      build_rules(SimplificationId::GGfromKolmO),
      build_rules(SimplificationId::KurodaFromKolmI),
      build_rules(SimplificationId::StarFromGfO),
      build_rules(SimplificationId::CircFromGfI),
      build_rules(SimplificationId::LinGGfromKolmO),
      build_rules(SimplificationId::LinKurodaFromKolmI),
  };
  return tables[static_cast<int>(id)];
}

Strategy strategy_for(SimplificationId id) {
  switch (id) {
    case SimplificationId::GGfromKolmO:
    case SimplificationId::StarFromGfO:
    case SimplificationId::LinGGfromKolmO:
      return Strategy::Outside;
    case SimplificationId::KurodaFromKolmI:
    case SimplificationId::CircFromGfI:
    case SimplificationId::LinKurodaFromKolmI:
      return Strategy::Inside;
  }
  throw std::logic_error("bad simplification id");
}

Formula source_translation(SimplificationId id, const Formula& a) {
  switch (id) {
    case SimplificationId::GGfromKolmO:
    case SimplificationId::LinGGfromKolmO:
      return kolmogorov(a, Presentation::Outer);
    case SimplificationId::KurodaFromKolmI:
    case SimplificationId::LinKurodaFromKolmI:
      return kolmogorov(a, Presentation::Inner);
    case SimplificationId::StarFromGfO:
      return girard_full(a, Presentation::Outer);
    case SimplificationId::CircFromGfI:
      return girard_full(a, Presentation::Inner);
  }
  throw std::logic_error("bad simplification id");
}

Formula target_translation(SimplificationId id, const Formula& a) {
  switch (id) {
    case SimplificationId::GGfromKolmO:
      return godel_gentzen(a);
    case SimplificationId::KurodaFromKolmI:
      return kuroda(a);
    case SimplificationId::StarFromGfO:
      return girard_star(a);
    case SimplificationId::CircFromGfI:
      return girard_circ(a, true);
    case SimplificationId::LinGGfromKolmO:
      return linear_godel_gentzen(a);
    case SimplificationId::LinKurodaFromKolmI:
      return linear_kuroda(a);
  }
  throw std::logic_error("bad simplification id");
}

namespace {

bool is_leaf(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return true;
    default:
      return false;
  }
}

// the decoration both source translations put on every image root
Formula marker(SimplificationId id, const Formula& x) {
  switch (id) {
    case SimplificationId::StarFromGfO:
    case SimplificationId::CircFromGfI:
      return Formula::bang(x);
    default:
      return nn(x);
  }
}

// the undecorated clause shape of the image: connective of the source node
// over the (already translated or simplified) child images
Formula clause_shape(const Formula& a, const std::vector<Formula>& kids) {
  switch (a.tag()) {
    case Conn::Tensor: return Formula::tensor(kids[0], kids[1]);
    case Conn::With: return Formula::with(kids[0], kids[1]);
    case Conn::Plus: return Formula::plus(kids[0], kids[1]);
    case Conn::Lolli: return Formula::lolli(kids[0], kids[1]);
    case Conn::Bang: return Formula::bang(kids[0]);
    case Conn::Forall: return Formula::forall(a.var(), kids[0]);
    case Conn::Exists: return Formula::exists(a.var(), kids[0]);
    default: break;
  }
  throw std::logic_error("leaf has no clause shape");
}

std::vector<Formula> source_children(const Formula& a) {
  switch (a.tag()) {
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return {a.left(), a.right()};
    case Conn::Bang:
      return {a.right()};
    case Conn::Forall:
    case Conn::Exists:
      return {a.body()};
    default:
      return {};
  }
}

}  // namespace

Formula apply_along(SimplificationId id, const Formula& a) {
  const auto& rules = rules_for(id);
  if (is_leaf(a)) {
    Formula node = marker(id, a);
    Formula out;
    if (try_rules(node, rules, &out, nullptr)) return out;
    return node;
  }
  std::vector<Formula> kids = source_children(a);
  if (strategy_for(id) == Strategy::Inside) {
    std::vector<Formula> g;
    for (const Formula& k : kids) g.push_back(apply_along(id, k));
    Formula node = marker(id, clause_shape(a, g));
    Formula out;
    if (try_rules(node, rules, &out, nullptr)) return out;
    return node;
  }
  // Outside fires at the image root before the children simplify, so the
  // match is decided on the untouched child images.  Every outside rule
  // here just strips the root marker and keeps the child images in place,
  // which lets us substitute the simplified children afterwards; the check
  // against the instantiated right-hand side keeps that assumption honest.
  std::vector<Formula> srcs;
  for (const Formula& k : kids) srcs.push_back(source_translation(id, k));
  Formula node = marker(id, clause_shape(a, srcs));
  Formula out;
  bool fired = try_rules(node, rules, &out, nullptr);
  if (fired && !(out == clause_shape(a, srcs)))
    throw std::logic_error("outside rule is not a root-marker drop");
  std::vector<Formula> g;
  for (const Formula& k : kids) g.push_back(apply_along(id, k));
  Formula body = clause_shape(a, g);
  return fired ? body : marker(id, body);
}

SimplificationReport check_simplification(SimplificationId id,
                                          const std::vector<Formula>& corpus) {
  SimplificationReport rep;
  for (const Formula& a : corpus) {
    SimplificationReport::Row row;
    row.input = a;
    row.expected = target_translation(id, a);
    row.got = apply_along(id, a);
    row.ok = row.got == row.expected;
    if (!row.ok) ++rep.failures;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace illtrans
