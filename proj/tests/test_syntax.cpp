#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "syntax.hpp"

using namespace illtrans;

TEST_CASE("precedence: prefix tightest, then * & + -o") {
  CHECK(parse_ill("P * Q + R") == parse_ill("(P * Q) + R"));
  CHECK(parse_ill("P & Q + R") == parse_ill("(P & Q) + R"));
  CHECK(parse_ill("P * Q & R") == parse_ill("(P * Q) & R"));
  CHECK(parse_ill("P + Q -o R") == parse_ill("(P + Q) -o R"));
  CHECK(parse_ill("!P * Q") == parse_ill("(!P) * Q"));
  CHECK(parse_ill("~P -o 0") == parse_ill("(~P) -o 0"));
}

TEST_CASE("linear implication associates to the right") {
  CHECK(parse_ill("P -o Q -o R") == parse_ill("P -o (Q -o R)"));
  CHECK(parse_ill("P -o Q -o R") != parse_ill("(P -o Q) -o R"));
}

TEST_CASE("negation and why-not are sugar") {
  CHECK(parse_ill("~P") == parse_ill("P -o 0"));
  CHECK(parse_ill("?P") == parse_ill("~!~P"));
  CHECK(parse_ill("~~P") == parse_ill("(P -o 0) -o 0"));
}

TEST_CASE("units parse to the right constants") {
  CHECK(parse_ill("1").tag() == Conn::One);
  CHECK(parse_ill("0").tag() == Conn::Zero);
  CHECK(parse_ill("top").tag() == Conn::Top);
}

TEST_CASE("unparenthesized quantifier body extends across -o") {
  Formula wide = parse_ill("forall x. P(x) -o Q");
  CHECK(wide.tag() == Conn::Forall);
  CHECK(wide.body().tag() == Conn::Lolli);
  Formula narrow = parse_ill("(forall x. P(x)) -o Q");
  CHECK(narrow.tag() == Conn::Lolli);
  CHECK(wide != narrow);
  // print keeps the distinction
  CHECK(print(wide) == "forall x. P(x) -o Q");
  CHECK(print(narrow) == "(forall x. P(x)) -o Q");
}

TEST_CASE("free identifiers in term position are constants, bound ones variables") {
  Formula f = parse_ill("forall x. P(x, c)");
  const std::vector<Term>& args = f.body().atom_args();
  REQUIRE(args.size() == 2);
  CHECK(args[0] == Term::var("x"));
  CHECK(args[1] == Term::constant("c"));
  // function symbols over both
  Formula g = parse_ill("exists y. Q(f(y, c))");
  CHECK(g.body().atom_args()[0] == Term::app("f", {Term::var("y"), Term::constant("c")}));
}

TEST_CASE("print goldens") {
  CHECK(print(parse_ill("P*Q+R")) == "P * Q + R");
  CHECK(print(parse_ill("!(P & Q) -o !P * !Q")) == "!(P & Q) -o !P * !Q");
  CHECK(print(parse_ill("~~P -o P")) == "~~P -o P");
  CHECK(print(parse_ill("?P")) == "?P");
  CHECK(print(parse_ill("exists x. (P(x) * Q)")) == "exists x. P(x) * Q");
  CHECK(print(parse_il("A /\\ B \\/ C -> D")) == "A /\\ B \\/ C -> D");
  CHECK(print(parse_cll("P par ?Q")) == "P par ?Q");
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_WITH_AS(parse_ill("P **"), "expected formula, got '*' (at offset 3)", ParseError);
  CHECK_THROWS_AS(parse_ill("(P * Q"), ParseError);
  CHECK_THROWS_AS(parse_ill(""), ParseError);
  CHECK_THROWS_AS(parse_ill("forall . P"), ParseError);
}

TEST_CASE("languages reject each other's connectives") {
  CHECK_THROWS_WITH_AS(parse_ill("P /\\ Q"), "'/\\' is not part of the ILL language (at offset 2)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_il("P * Q"), "'*' is not part of the IL language (at offset 2)",
                       ParseError);
  CHECK_THROWS_AS(parse_il("~P"), ParseError);
  CHECK_THROWS_AS(parse_il("!P"), ParseError);
  CHECK_THROWS_AS(parse_cll("P -o Q"), ParseError);
  CHECK_THROWS_AS(parse_cll("P -> Q"), ParseError);
  CHECK_THROWS_AS(parse_ill("P par Q"), ParseError);
}

TEST_CASE("CLL exponentials and par") {
  SourceFormulaCLL f = parse_cll("!P par ?Q");
  CHECK(f.tag() == CLLConn::Par);
  CHECK(f.left().tag() == CLLConn::Bang);
  CHECK(f.right().tag() == CLLConn::Quest);
  CHECK(parse_cll("bot").tag() == CLLConn::Bot);
}

TEST_CASE("sequent parsing") {
  ParsedSequent s = parse_sequent("P, !Q |- P * !Q");
  REQUIRE(s.hyps.size() == 2);
  CHECK(s.hyps[0] == parse_ill("P"));
  CHECK(s.hyps[1] == parse_ill("!Q"));
  CHECK(s.goal == parse_ill("P * !Q"));

  ParsedSequent empty_ctx = parse_sequent("|- 1");
  CHECK(empty_ctx.hyps.empty());
  CHECK(empty_ctx.goal.tag() == Conn::One);

  CHECK_THROWS_AS(parse_sequent("P, Q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("P |- Q |- R"), ParseError);
}

TEST_CASE("round trip over a random corpus, all three languages") {
  CorpusParams cp;
  cp.count = 150;
  cp.seed = 11;
  for (const Formula& f : random_ill(cp)) {
    CHECK(parse_ill(print(f)) == f);
  }
  for (const SourceFormulaIL& f : random_il(cp)) {
    CHECK(parse_il(print(f)) == f);
  }
  for (const SourceFormulaCLL& f : random_cll(cp)) {
    CHECK(parse_cll(print(f)) == f);
  }
}
