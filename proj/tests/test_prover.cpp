#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prover.hpp"
#include "syntax.hpp"

using namespace illtrans;

static Sequent seq(const std::string& text) {
  ParsedSequent p = parse_sequent(text);
  return Sequent{p.hyps, p.goal};
}

static bool holds(const std::string& text, const Theory& th) {
  return prove(seq(text), th, Budget{}).proved();
}

TEST_CASE("plain linear theorems") {
  Theory th = Theory::ill();
  CHECK(holds("P |- P", th));
  CHECK(holds("|- P -o P", th));
  CHECK(holds("P, Q |- P * Q", th));
  CHECK(holds("P & Q |- P", th));
  CHECK(holds("P |- P + Q", th));
  CHECK(holds("|- 1", th));
  CHECK(holds("0 |- P", th));
  CHECK(holds("P |- top", th));
  CHECK(holds("!P |- P", th));                    // dereliction
  CHECK(holds("!P |- !P * !P", th));              // contraction
  CHECK(holds("!P |- 1", th));                    // weakening
  CHECK(holds("!P |- !!P", th));                  // digging
  CHECK(holds("!(P & Q) |- !P * !Q", th));
  CHECK(holds("!P * !Q |- !(P & Q)", th));
  CHECK(holds("P -o Q, Q -o R |- P -o R", th));
  CHECK(holds("P |- ~~P", th));
}

TEST_CASE("linear non-theorems saturate") {
  Theory th = Theory::ill();
  Budget b;
  CHECK(prove(seq("P |- P * P"), th, b).status == ProofStatus::Saturated);
  CHECK(prove(seq("P, Q |- P"), th, b).status == ProofStatus::Saturated);
  CHECK(prove(seq("P + Q |- P"), th, b).status == ProofStatus::Saturated);
  CHECK(prove(seq("~~P |- P"), th, b).status == ProofStatus::Saturated);
  CHECK(prove(seq("P |- !P"), th, b).status == ProofStatus::Saturated);
  CHECK(prove(seq("P * Q |- P & Q"), th, b).status == ProofStatus::Saturated);
}

TEST_CASE("the pro axiom recovers structural logic") {
  Theory th = Theory::ilb();
  CHECK(holds("P |- !P", th));
  CHECK(holds("P |- P * P", th));       // contraction on plain hypotheses
  CHECK(holds("P, Q |- P", th));        // weakening
  CHECK(holds("P * Q |- P & Q", th));
  CHECK(holds("|- ~~(~~P -o P)", th));  // the double negation shift under ~~
  CHECK(!holds("~~P |- P", th));        // still not classical
}

TEST_CASE("the dne axiom recovers classical linear reasoning") {
  Theory th = Theory::cllb();
  CHECK(holds("~~P |- P", th));
  CHECK(holds("|- ~~P -o P", th));
  CHECK(holds("~~(P * Q) |- P * Q", th));
  CHECK(!holds("P |- !P", th));         // still linear
  CHECK(!holds("P |- P * P", th));
}

TEST_CASE("both axioms give full classical logic") {
  Theory th = Theory::clb();
  CHECK(holds("|- ((P -o Q) -o P) -o P", th));  // Peirce
  CHECK(holds("|- P + ~P", th));
  CHECK(!holds("|- 0", th));
}

TEST_CASE("theory names") {
  CHECK(std::string(Theory::ill().name()) == "ILL");
  CHECK(std::string(Theory::ilb().name()) == "IL_b");
  CHECK(std::string(Theory::cllb().name()) == "CLL_b");
  CHECK(std::string(Theory::clb().name()) == "CL_b");
}

TEST_CASE("quantifiers and eigenvariable discipline") {
  Theory th = Theory::ill();
  CHECK(holds("forall x. P(x) |- P(c)", th));
  CHECK(holds("P(c) |- exists x. P(x)", th));
  CHECK(holds("forall x. (P(x) & Q(x)) |- forall x. P(x)", th));
  CHECK(holds("exists x. (P(x) * Q) |- (exists x. P(x)) * Q", th));
  // eigenvariable violations must not prove
  CHECK(!holds("P(c) |- forall x. P(x)", th));
  CHECK(!holds("exists x. P(x) |- forall x. P(x)", th));
  CHECK(!holds("forall x. (exists y. R(x, y)) |- exists y. (forall x. R(x, y))", th));
  // but the sound direction does
  CHECK(holds("exists y. (forall x. R(x, y)) |- forall x. (exists y. R(x, y))", th));
}

TEST_CASE("sequent text and keys") {
  Sequent s = seq("P, !Q |- P * !Q");
  CHECK(sequent_to_text(s) == "P, !Q |- P * !Q");
  // key is hypothesis-order and alpha invariant
  CHECK(sequent_key(seq("P, !Q |- R")) == sequent_key(seq("!Q, P |- R")));
  CHECK(sequent_key(seq("forall x. P(x) |- Q")) == sequent_key(seq("forall y. P(y) |- Q")));
  CHECK(sequent_key(seq("P |- Q")) != sequent_key(seq("Q |- P")));
}

TEST_CASE("proof trees record the applied rules") {
  ProofResult r = prove(seq("P, Q |- P * Q"), Theory::ill(), Budget{});
  REQUIRE(r.proved());
  std::string text = proof_to_text(*r.tree);
  CHECK(text.find("id") != std::string::npos);
  CHECK(text.find("P, Q |- P * Q") != std::string::npos);
}

TEST_CASE("budget exhaustion is distinguished from saturation") {
  Budget tiny;
  tiny.max_depth = 1;
  ProofResult r = prove(seq("P, Q, R |- P * (Q * R)"), Theory::ill(), tiny);
  CHECK(r.status == ProofStatus::BudgetExhausted);
  Budget enough;
  CHECK(prove(seq("P, Q, R |- P * (Q * R)"), Theory::ill(), enough).proved());
}

TEST_CASE("proving with axioms and derived rules") {
  Theory th = Theory::ill();
  Budget b;
  // with A |- B as an axiom, !A |- !B becomes derivable (functoriality)
  Sequent prem = seq("A |- B");
  Sequent conc = seq("!A |- !B");
  CHECK(check_derived_rule(prem, conc, th, b));
  CHECK(!prove(conc, th, b).proved());  // not derivable without the axiom
  // uncurrying closure: an axiom G |- A -o B also licenses G, A |- B
  std::vector<Sequent> axioms = {seq("|- P -o Q")};
  CHECK(prove_with_axioms(seq("P |- Q"), th, b, axioms).proved());
  CHECK(axiom_closure(axioms).size() == 2);
}

TEST_CASE("pairwise equivalence check returns both proofs") {
  EquivResult r = check_equiv(parse_ill("P * Q"), parse_ill("Q * P"), Theory::ill(), Budget{});
  CHECK(r.equivalent);
  REQUIRE(r.forward);
  REQUIRE(r.backward);
  CHECK(!check_equiv(parse_ill("P * Q"), parse_ill("P & Q"), Theory::ill(), Budget{}).equivalent);
}

TEST_CASE("batch equivalence checker decomposes by congruence") {
  EquivalenceChecker chk(Theory::ill(), Budget{});
  CHECK(chk.equivalent(parse_ill("(P * Q) & R"), parse_ill("(Q * P) & R")));
  CHECK(!chk.equivalent(parse_ill("P * Q"), parse_ill("P & Q")));
  // backs off to the enclosing pair when subterms differ but the whole agrees
  CHECK(chk.equivalent(parse_ill("!(P & P)"), parse_ill("!(!P & !P)")));
  // the bang-peel case: !X against Y where Y proves its own promotion
  CHECK(chk.equivalent(parse_ill("!(!P * !Q)"), parse_ill("!P * !Q")));
  CHECK(!chk.direct_proofs().empty());
}
