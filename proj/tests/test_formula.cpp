#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "formula.hpp"

using namespace illtrans;

static Term x() { return Term::var("x"); }
static Term y() { return Term::var("y"); }
static Term c() { return Term::constant("c"); }

TEST_CASE("term equality distinguishes kinds and names") {
  CHECK(x() == x());
  CHECK(x() != y());
  CHECK(x() != Term::constant("x"));
  CHECK(Term::app("f", {x()}) == Term::app("f", {x()}));
  CHECK(Term::app("f", {x()}) != Term::app("f", {y()}));
  CHECK(Term::app("f", {x()}) != Term::app("g", {x()}));
}

TEST_CASE("term substitution replaces only the named variable") {
  Term t = Term::app("f", {x(), y(), Term::constant("x")});
  Term s = substitute(t, "x", c());
  CHECK(s == Term::app("f", {c(), y(), Term::constant("x")}));
  // constants never substitute
  CHECK(substitute(c(), "c", x()) == c());
}

TEST_CASE("formula equality is structural, including binder names") {
  Formula p = Formula::atom("P");
  CHECK(Formula::tensor(p, p) == Formula::tensor(p, p));
  CHECK(Formula::tensor(p, p) != Formula::with(p, p));
  Formula fx = Formula::forall("x", Formula::atom("P", {x()}));
  Formula fy = Formula::forall("y", Formula::atom("P", {y()}));
  CHECK(fx != fy);        // plain equality sees the names
  CHECK(alpha_eq(fx, fy));  // alpha equality does not
}

TEST_CASE("alpha equality requires matching structure under binders") {
  Formula fx = Formula::forall("x", Formula::atom("P", {x()}));
  Formula gx = Formula::exists("x", Formula::atom("P", {x()}));
  CHECK(!alpha_eq(fx, gx));
  Formula fxy = Formula::forall("x", Formula::forall("y", Formula::atom("R", {x(), y()})));
  Formula fyx = Formula::forall("y", Formula::forall("x", Formula::atom("R", {y(), x()})));
  CHECK(alpha_eq(fxy, fyx));
  Formula swapped = Formula::forall("y", Formula::forall("x", Formula::atom("R", {x(), y()})));
  CHECK(!alpha_eq(fxy, swapped));
}

TEST_CASE("formula substitution avoids capture") {
  // (forall y. R(x, y))[x := y] must rename the binder, not capture
  Formula f = Formula::forall("y", Formula::atom("R", {x(), y()}));
  Formula s = substitute(f, "x", y());
  CHECK(s.tag() == Conn::Forall);
  CHECK(s.var() != "y");
  const std::vector<Term>& args = s.body().atom_args();
  REQUIRE(args.size() == 2);
  CHECK(args[0] == y());                       // the substituted free variable
  CHECK(args[1] == Term::var(s.var()));        // the renamed bound one
  CHECK(free_vars(s) == std::set<std::string>{"y"});
}

TEST_CASE("substitution stops at a shadowing binder") {
  Formula f = Formula::forall("x", Formula::atom("P", {x()}));
  CHECK(substitute(f, "x", c()) == f);
}

TEST_CASE("free variables") {
  Formula f = Formula::tensor(Formula::atom("P", {x()}),
                              Formula::exists("x", Formula::atom("Q", {x(), y()})));
  CHECK(free_vars(f) == std::set<std::string>{"x", "y"});
  CHECK(free_vars(Formula::atom("P", {c()})).empty());
}

TEST_CASE("negation and why-not abbreviations expand and re-match") {
  Formula p = Formula::atom("P");
  CHECK(neg(p) == Formula::lolli(p, Formula::zero()));
  CHECK(quest(p) == neg(Formula::bang(neg(p))));

  Formula inner;
  CHECK(match_neg(neg(p), &inner));
  CHECK(inner == p);
  CHECK(!match_neg(Formula::lolli(p, Formula::one()), &inner));

  CHECK(match_quest(quest(p), &inner));
  CHECK(inner == p);
  // ~!X for X that is not a negation is not a why-not
  CHECK(!match_quest(neg(Formula::bang(p)), &inner));
}

TEST_CASE("lequiv is the conjunction of both implications") {
  Formula p = Formula::atom("P"), q = Formula::atom("Q");
  CHECK(lequiv(p, q) == Formula::with(Formula::lolli(p, q), Formula::lolli(q, p)));
}

TEST_CASE("formula_key is alpha invariant and injective on distinct shapes") {
  Formula fx = Formula::forall("x", Formula::atom("P", {x()}));
  Formula fy = Formula::forall("y", Formula::atom("P", {y()}));
  CHECK(formula_key(fx) == formula_key(fy));
  CHECK(formula_key(fx) != formula_key(Formula::exists("x", Formula::atom("P", {x()}))));
  CHECK(formula_key(Formula::tensor(fx, fy)) == formula_key(Formula::tensor(fy, fx)));
  // free variables keep their identity in the key
  CHECK(formula_key(Formula::atom("P", {x()})) != formula_key(Formula::atom("P", {y()})));
  // a free variable and a constant of the same name differ
  CHECK(formula_key(Formula::atom("P", {x()})) !=
        formula_key(Formula::atom("P", {Term::constant("x")})));
}

TEST_CASE("size and atom census") {
  Formula p = Formula::atom("P"), q = Formula::atom("Q");
  Formula f = Formula::bang(Formula::tensor(p, Formula::with(q, p)));
  CHECK(formula_size(p) == 1);
  CHECK(formula_size(f) == 6);
  CHECK(atom_names(f) == std::vector<std::string>{"P", "Q", "P"});
}

TEST_CASE("source language ASTs compare structurally") {
  SourceFormulaIL a = SourceFormulaIL::imp(SourceFormulaIL::atom("P"), SourceFormulaIL::bot());
  SourceFormulaIL b = SourceFormulaIL::imp(SourceFormulaIL::atom("P"), SourceFormulaIL::bot());
  CHECK(a == b);
  CHECK(a != SourceFormulaIL::imp(SourceFormulaIL::atom("P"), SourceFormulaIL::top()));

  SourceFormulaCLL l = SourceFormulaCLL::par(SourceFormulaCLL::atom("P"),
                                             SourceFormulaCLL::quest(SourceFormulaCLL::atom("Q")));
  CHECK(l.tag() == CLLConn::Par);
  CHECK(l.right().tag() == CLLConn::Quest);
  CHECK(alpha_eq(SourceFormulaCLL::forall("x", SourceFormulaCLL::atom("P", {x()})),
                 SourceFormulaCLL::forall("y", SourceFormulaCLL::atom("P", {y()}))));
}
