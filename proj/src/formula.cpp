#include "formula.hpp"

#include <stdexcept>

namespace illtrans {

// ---------------------------------------------------------------------------
// Terms

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::Var;
  t.name_ = std::move(name);
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Const;
  t.name_ = std::move(name);
  return t;
}

Term Term::app(std::string fn, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::App;
  t.name_ = std::move(fn);
  t.args_ = std::move(args);
  return t;
}

bool Term::operator==(const Term& o) const {
  return kind_ == o.kind_ && name_ == o.name_ && args_ == o.args_;
}

Term substitute(const Term& t, const std::string& x, const Term& repl) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == x ? repl : t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(substitute(a, x, repl));
      return Term::app(t.name(), std::move(args));
    }
  }
  throw std::logic_error("bad term kind");
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Var) out.insert(t.name());
  for (const Term& a : t.args()) collect_vars(a, out);
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
  Conn tag;
  std::string name;         // Atom predicate, or binder variable
  std::vector<Term> args;   // Atom arguments
  Formula l, r;             // binary operands; Bang uses r
  Formula body;             // quantifier body
};

Formula Formula::atom(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Atom;
  n->name = std::move(name);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Top;
  return Formula(std::move(n));
}

Formula Formula::zero() {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Zero;
  return Formula(std::move(n));
}

Formula Formula::one() {
  auto n = std::make_shared<Node>();
  n->tag = Conn::One;
  return Formula(std::move(n));
}

Formula Formula::tensor(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Tensor;
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}
Formula Formula::with(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::With;
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}
Formula Formula::plus(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Plus;
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}
Formula Formula::lolli(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Lolli;
  n->l = std::move(l);
  n->r = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::bang(Formula f) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Bang;
  n->r = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Forall;
  n->name = std::move(var);
  n->body = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->tag = Conn::Exists;
  n->name = std::move(var);
  n->body = std::move(body);
  return Formula(std::move(n));
}

Conn Formula::tag() const { return node_->tag; }
const std::string& Formula::atom_name() const { return node_->name; }
const std::vector<Term>& Formula::atom_args() const { return node_->args; }
const Formula& Formula::left() const { return node_->l; }
const Formula& Formula::right() const { return node_->r; }
const std::string& Formula::var() const { return node_->name; }
const Formula& Formula::body() const { return node_->body; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Conn::Atom:
      return a.name == b.name && a.args == b.args;
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return true;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return a.l == b.l && a.r == b.r;
    case Conn::Bang:
      return a.r == b.r;
    case Conn::Forall:
    case Conn::Exists:
      return a.name == b.name && a.body == b.body;
  }
  return false;
}

Formula neg(const Formula& a) { return Formula::lolli(a, Formula::zero()); }

Formula quest(const Formula& a) { return neg(Formula::bang(neg(a))); }

Formula lequiv(const Formula& a, const Formula& b) {
  return Formula::with(Formula::lolli(a, b), Formula::lolli(b, a));
}

bool match_neg(const Formula& f, Formula* inner) {
  if (f.tag() != Conn::Lolli || f.right().tag() != Conn::Zero) return false;
  if (inner) *inner = f.left();
  return true;
}

bool match_quest(const Formula& f, Formula* inner) {
  Formula outer;
  if (!match_neg(f, &outer)) return false;
  if (outer.tag() != Conn::Bang) return false;
  Formula in;
  if (!match_neg(outer.right(), &in)) return false;
  if (inner) *inner = in;
  return true;
}

// ---------------------------------------------------------------------------
// Alpha equivalence, substitution, traversals

namespace {

struct AlphaEnv {
  // parallel stacks of bound names
  std::vector<std::pair<std::string, std::string>> pairs;

  bool var_eq(const std::string& a, const std::string& b) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (it->first == a || it->second == b) return it->first == a && it->second == b;
    }
    return a == b;  // both free
  }

  bool term_eq(const Term& s, const Term& t) const {
    if (s.kind() != t.kind()) return false;
    if (s.kind() == Term::Kind::Var) return var_eq(s.name(), t.name());
    if (s.name() != t.name() || s.args().size() != t.args().size()) return false;
    for (size_t i = 0; i < s.args().size(); ++i)
      if (!term_eq(s.args()[i], t.args()[i])) return false;
    return true;
  }
};

bool alpha_eq_rec(const Formula& a, const Formula& b, AlphaEnv& env) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Conn::Atom: {
      if (a.atom_name() != b.atom_name() || a.atom_args().size() != b.atom_args().size())
        return false;
      for (size_t i = 0; i < a.atom_args().size(); ++i)
        if (!env.term_eq(a.atom_args()[i], b.atom_args()[i])) return false;
      return true;
    }
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return true;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return alpha_eq_rec(a.left(), b.left(), env) && alpha_eq_rec(a.right(), b.right(), env);
    case Conn::Bang:
      return alpha_eq_rec(a.right(), b.right(), env);
    case Conn::Forall:
    case Conn::Exists: {
      env.pairs.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_rec(a.body(), b.body(), env);
      env.pairs.pop_back();
      return ok;
    }
  }
  return false;
}

void free_vars_rec(const Formula& a, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (a.tag()) {
    case Conn::Atom: {
      std::set<std::string> vs;
      for (const Term& t : a.atom_args()) collect_vars(t, vs);
      for (const std::string& v : vs) {
        bool is_bound = false;
        for (const std::string& b : bound)
          if (b == v) { is_bound = true; break; }
        if (!is_bound) out.insert(v);
      }
      return;
    }
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      free_vars_rec(a.left(), bound, out);
      free_vars_rec(a.right(), bound, out);
      return;
    case Conn::Bang:
      free_vars_rec(a.right(), bound, out);
      return;
    case Conn::Forall:
    case Conn::Exists:
      bound.push_back(a.var());
      free_vars_rec(a.body(), bound, out);
      bound.pop_back();
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base + "'";
  while (avoid.count(cand)) cand += "'";
  return cand;
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  AlphaEnv env;
  return alpha_eq_rec(a, b, env);
}

std::set<std::string> free_vars(const Formula& a) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_vars_rec(a, bound, out);
  return out;
}

Formula substitute(const Formula& a, const std::string& x, const Term& t) {
  switch (a.tag()) {
    case Conn::Atom: {
      std::vector<Term> args;
      args.reserve(a.atom_args().size());
      for (const Term& arg : a.atom_args()) args.push_back(substitute(arg, x, t));
      return Formula::atom(a.atom_name(), std::move(args));
    }
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return a;
    case Conn::Tensor:
      return Formula::tensor(substitute(a.left(), x, t), substitute(a.right(), x, t));
    case Conn::With:
      return Formula::with(substitute(a.left(), x, t), substitute(a.right(), x, t));
    case Conn::Plus:
      return Formula::plus(substitute(a.left(), x, t), substitute(a.right(), x, t));
    case Conn::Lolli:
      return Formula::lolli(substitute(a.left(), x, t), substitute(a.right(), x, t));
    case Conn::Bang:
      return Formula::bang(substitute(a.right(), x, t));
    case Conn::Forall:
    case Conn::Exists: {
      if (a.var() == x) return a;
      std::set<std::string> repl_vars;
      collect_vars(t, repl_vars);
      std::string v = a.var();
      Formula body = a.body();
      if (repl_vars.count(v) && free_vars(body).count(x)) {
        // capture: rename the binder first
        std::set<std::string> avoid = free_vars(body);
        avoid.insert(repl_vars.begin(), repl_vars.end());
        avoid.insert(x);
        std::string v2 = fresh_name(v, avoid);
        body = substitute(body, v, Term::var(v2));
        v = v2;
      }
      Formula nb = substitute(body, x, t);
      return a.tag() == Conn::Forall ? Formula::forall(v, nb) : Formula::exists(v, nb);
    }
  }
  throw std::logic_error("bad formula tag");
}

size_t formula_size(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return 1;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      return 1 + formula_size(a.left()) + formula_size(a.right());
    case Conn::Bang:
      return 1 + formula_size(a.right());
    case Conn::Forall:
    case Conn::Exists:
      return 1 + formula_size(a.body());
  }
  return 1;
}

static void atom_names_rec(const Formula& a, std::vector<std::string>& out) {
  switch (a.tag()) {
    case Conn::Atom:
      out.push_back(a.atom_name());
      return;
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      atom_names_rec(a.left(), out);
      atom_names_rec(a.right(), out);
      return;
    case Conn::Bang:
      atom_names_rec(a.right(), out);
      return;
    case Conn::Forall:
    case Conn::Exists:
      atom_names_rec(a.body(), out);
      return;
  }
}

std::vector<std::string> atom_names(const Formula& a) {
  std::vector<std::string> out;
  atom_names_rec(a, out);
  return out;
}

namespace {

void term_key(const Term& t, const std::vector<std::string>& binders, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == t.name()) {
          out += "b";
          out += std::to_string(binders.size() - 1 - i);
          return;
        }
      }
      out += "v:";
      out += t.name();
      return;
    }
    case Term::Kind::Const:
      out += "c:";
      out += t.name();
      return;
    case Term::Kind::App:
      out += "f:";
      out += t.name();
      out += "(";
      for (const Term& a : t.args()) {
        term_key(a, binders, out);
        out += ",";
      }
      out += ")";
      return;
  }
}

void key_rec(const Formula& a, std::vector<std::string>& binders, std::string& out) {
  switch (a.tag()) {
    case Conn::Atom:
      out += "A:";
      out += a.atom_name();
      if (!a.atom_args().empty()) {
        out += "(";
        for (const Term& t : a.atom_args()) {
          term_key(t, binders, out);
          out += ",";
        }
        out += ")";
      }
      return;
    case Conn::Top: out += "T"; return;
    case Conn::Zero: out += "Z"; return;
    case Conn::One: out += "I"; return;
    case Conn::Tensor: out += "*("; break;
    case Conn::With: out += "&("; break;
    case Conn::Plus: out += "+("; break;
    case Conn::Lolli: out += ">("; break;
    case Conn::Bang:
      out += "!(";
      key_rec(a.right(), binders, out);
      out += ")";
      return;
    case Conn::Forall:
    case Conn::Exists:
      out += a.tag() == Conn::Forall ? "@(" : "#(";
      binders.push_back(a.var());
      key_rec(a.body(), binders, out);
      binders.pop_back();
      out += ")";
      return;
  }
  key_rec(a.left(), binders, out);
  out += ",";
  key_rec(a.right(), binders, out);
  out += ")";
}

}  // namespace

std::string formula_key(const Formula& a) {
  std::string out;
  out.reserve(formula_size(a) * 4);
  std::vector<std::string> binders;
  key_rec(a, binders, out);
  return out;
}

// ---------------------------------------------------------------------------
// SourceFormulaIL

struct SourceFormulaIL::Node {
  ILConn tag;
  std::string name;
  std::vector<Term> args;
  SourceFormulaIL l, r;
  SourceFormulaIL body;
};

SourceFormulaIL SourceFormulaIL::atom(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Atom;
  n->name = std::move(name);
  n->args = std::move(args);
  return SourceFormulaIL(std::move(n));
}

SourceFormulaIL SourceFormulaIL::bot() {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Bot;
  return SourceFormulaIL(std::move(n));
}

SourceFormulaIL SourceFormulaIL::top() {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Top;
  return SourceFormulaIL(std::move(n));
}

SourceFormulaIL SourceFormulaIL::and_(SourceFormulaIL l, SourceFormulaIL r) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::And;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaIL(std::move(n));
}
SourceFormulaIL SourceFormulaIL::or_(SourceFormulaIL l, SourceFormulaIL r) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Or;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaIL(std::move(n));
}
SourceFormulaIL SourceFormulaIL::imp(SourceFormulaIL l, SourceFormulaIL r) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Imp;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaIL(std::move(n));
}

SourceFormulaIL SourceFormulaIL::forall(std::string var, SourceFormulaIL body) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Forall;
  n->name = std::move(var);
  n->body = std::move(body);
  return SourceFormulaIL(std::move(n));
}

SourceFormulaIL SourceFormulaIL::exists(std::string var, SourceFormulaIL body) {
  auto n = std::make_shared<Node>();
  n->tag = ILConn::Exists;
  n->name = std::move(var);
  n->body = std::move(body);
  return SourceFormulaIL(std::move(n));
}

ILConn SourceFormulaIL::tag() const { return node_->tag; }
const std::string& SourceFormulaIL::atom_name() const { return node_->name; }
const std::vector<Term>& SourceFormulaIL::atom_args() const { return node_->args; }
const SourceFormulaIL& SourceFormulaIL::left() const { return node_->l; }
const SourceFormulaIL& SourceFormulaIL::right() const { return node_->r; }
const std::string& SourceFormulaIL::var() const { return node_->name; }
const SourceFormulaIL& SourceFormulaIL::body() const { return node_->body; }

bool SourceFormulaIL::operator==(const SourceFormulaIL& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case ILConn::Atom:
      return a.name == b.name && a.args == b.args;
    case ILConn::Bot:
    case ILConn::Top:
      return true;
    case ILConn::And:
    case ILConn::Or:
    case ILConn::Imp:
      return a.l == b.l && a.r == b.r;
    case ILConn::Forall:
    case ILConn::Exists:
      return a.name == b.name && a.body == b.body;
  }
  return false;
}

namespace {

bool alpha_eq_il_rec(const SourceFormulaIL& a, const SourceFormulaIL& b, AlphaEnv& env) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case ILConn::Atom: {
      if (a.atom_name() != b.atom_name() || a.atom_args().size() != b.atom_args().size())
        return false;
      for (size_t i = 0; i < a.atom_args().size(); ++i)
        if (!env.term_eq(a.atom_args()[i], b.atom_args()[i])) return false;
      return true;
    }
    case ILConn::Bot:
    case ILConn::Top:
      return true;
    case ILConn::And:
    case ILConn::Or:
    case ILConn::Imp:
      return alpha_eq_il_rec(a.left(), b.left(), env) && alpha_eq_il_rec(a.right(), b.right(), env);
    case ILConn::Forall:
    case ILConn::Exists: {
      env.pairs.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_il_rec(a.body(), b.body(), env);
      env.pairs.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const SourceFormulaIL& a, const SourceFormulaIL& b) {
  AlphaEnv env;
  return alpha_eq_il_rec(a, b, env);
}

// ---------------------------------------------------------------------------
// SourceFormulaCLL

struct SourceFormulaCLL::Node {
  CLLConn tag;
  std::string name;
  std::vector<Term> args;
  SourceFormulaCLL l, r;
  SourceFormulaCLL body;
};

SourceFormulaCLL SourceFormulaCLL::atom(std::string name, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Atom;
  n->name = std::move(name);
  n->args = std::move(args);
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::top() {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Top;
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::zero() {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Zero;
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::one() {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::One;
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::bot() {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Bot;
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::tensor(SourceFormulaCLL l, SourceFormulaCLL r) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Tensor;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::with(SourceFormulaCLL l, SourceFormulaCLL r) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::With;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::plus(SourceFormulaCLL l, SourceFormulaCLL r) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Plus;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaCLL(std::move(n));
}
SourceFormulaCLL SourceFormulaCLL::par(SourceFormulaCLL l, SourceFormulaCLL r) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Par;
  n->l = std::move(l);
  n->r = std::move(r);
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::bang(SourceFormulaCLL f) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Bang;
  n->r = std::move(f);
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::quest(SourceFormulaCLL f) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Quest;
  n->r = std::move(f);
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::forall(std::string var, SourceFormulaCLL body) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Forall;
  n->name = std::move(var);
  n->body = std::move(body);
  return SourceFormulaCLL(std::move(n));
}

SourceFormulaCLL SourceFormulaCLL::exists(std::string var, SourceFormulaCLL body) {
  auto n = std::make_shared<Node>();
  n->tag = CLLConn::Exists;
  n->name = std::move(var);
  n->body = std::move(body);
  return SourceFormulaCLL(std::move(n));
}

CLLConn SourceFormulaCLL::tag() const { return node_->tag; }
const std::string& SourceFormulaCLL::atom_name() const { return node_->name; }
const std::vector<Term>& SourceFormulaCLL::atom_args() const { return node_->args; }
const SourceFormulaCLL& SourceFormulaCLL::left() const { return node_->l; }
const SourceFormulaCLL& SourceFormulaCLL::right() const { return node_->r; }
const std::string& SourceFormulaCLL::var() const { return node_->name; }
const SourceFormulaCLL& SourceFormulaCLL::body() const { return node_->body; }

bool SourceFormulaCLL::operator==(const SourceFormulaCLL& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case CLLConn::Atom:
      return a.name == b.name && a.args == b.args;
    case CLLConn::Top:
    case CLLConn::Zero:
    case CLLConn::One:
    case CLLConn::Bot:
      return true;
    case CLLConn::Tensor:
    case CLLConn::With:
    case CLLConn::Plus:
    case CLLConn::Par:
      return a.l == b.l && a.r == b.r;
    case CLLConn::Bang:
    case CLLConn::Quest:
      return a.r == b.r;
    case CLLConn::Forall:
    case CLLConn::Exists:
      return a.name == b.name && a.body == b.body;
  }
  return false;
}

namespace {

bool alpha_eq_cll_rec(const SourceFormulaCLL& a, const SourceFormulaCLL& b, AlphaEnv& env) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case CLLConn::Atom: {
      if (a.atom_name() != b.atom_name() || a.atom_args().size() != b.atom_args().size())
        return false;
      for (size_t i = 0; i < a.atom_args().size(); ++i)
        if (!env.term_eq(a.atom_args()[i], b.atom_args()[i])) return false;
      return true;
    }
    case CLLConn::Top:
    case CLLConn::Zero:
    case CLLConn::One:
    case CLLConn::Bot:
      return true;
    case CLLConn::Tensor:
    case CLLConn::With:
    case CLLConn::Plus:
    case CLLConn::Par:
      return alpha_eq_cll_rec(a.left(), b.left(), env) &&
             alpha_eq_cll_rec(a.right(), b.right(), env);
    case CLLConn::Bang:
    case CLLConn::Quest:
      return alpha_eq_cll_rec(a.right(), b.right(), env);
    case CLLConn::Forall:
    case CLLConn::Exists: {
      env.pairs.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_cll_rec(a.body(), b.body(), env);
      env.pairs.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const SourceFormulaCLL& a, const SourceFormulaCLL& b) {
  AlphaEnv env;
  return alpha_eq_cll_rec(a, b, env);
}

}  // namespace illtrans
