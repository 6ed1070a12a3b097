#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "models.hpp"
#include "syntax.hpp"

using namespace illtrans;

static Sequent seq(const std::string& text) {
  ParsedSequent p = parse_sequent(text);
  return Sequent{p.hyps, p.goal};
}

// The three element chain 0 < 1 < 2 with Lukasiewicz tensor
// (a * b = max(0, a + b - 2)) and ! collapsing everything below top to 0.
static Algebra chain3() {
  Algebra a;
  a.n = 3;
  a.leq_.assign(9, 0);
  a.meet_.assign(9, 0);
  a.join_.assign(9, 0);
  a.ten_.assign(9, 0);
  a.imp_.assign(9, 0);
  for (int x = 0; x < 3; x++) {
    for (int y = 0; y < 3; y++) {
      a.leq_[x * 3 + y] = x <= y;
      a.meet_[x * 3 + y] = std::min(x, y);
      a.join_[x * 3 + y] = std::max(x, y);
      a.ten_[x * 3 + y] = std::max(0, x + y - 2);
      a.imp_[x * 3 + y] = std::min(2, 2 - x + y);
    }
  }
  a.bang_ = {0, 0, 2};
  return a;
}

TEST_CASE("a hand-built algebra satisfies the laws") {
  std::string why;
  CHECK(algebra_valid(chain3(), Theory::ill(), &why));
  CHECK(why.empty());
}

TEST_CASE("broken tables are rejected with a reason") {
  Algebra a = chain3();
  a.bang_ = {0, 2, 2};  // !1 = 2 violates !a <= a
  std::string why;
  CHECK(!algebra_valid(a, Theory::ill(), &why));
  CHECK(!why.empty());

  Algebra b = chain3();
  b.ten_[1 * 3 + 2] = 2;  // breaks the unit law 1 * top = 1
  CHECK(!algebra_valid(b, Theory::ill(), nullptr));
}

TEST_CASE("the pro and dne theories impose their extra laws") {
  Algebra a = chain3();
  // pro forces ! = id and * = meet; the Lukasiewicz chain has neither
  CHECK(!algebra_valid(a, Theory::ilb(), nullptr));
  // dne holds in the Lukasiewicz chain (involutive negation)
  CHECK(algebra_valid(a, Theory::cllb(), nullptr));

  Algebra heyting = chain3();
  for (int x = 0; x < 3; x++)
    for (int y = 0; y < 3; y++) {
      heyting.ten_[x * 3 + y] = std::min(x, y);
      heyting.imp_[x * 3 + y] = (x <= y) ? 2 : y;
    }
  heyting.bang_ = {0, 1, 2};
  CHECK(algebra_valid(heyting, Theory::ilb(), nullptr));
  CHECK(!algebra_valid(heyting, Theory::clb(), nullptr));  // ~~a = a fails at a = 1
}

TEST_CASE("enumeration counts are stable") {
  Theory ill = Theory::ill();
  int expected[] = {1, 1, 3, 16, 75, 555};
  for (int n = 1; n <= 6; n++) {
    CHECK(enumerate_algebras(n, ill).size() == size_t(expected[n - 1]));
    for (const Algebra& a : enumerate_algebras(n, ill)) {
      CHECK(algebra_valid(a, ill, nullptr));
    }
  }
  CHECK(enumerate_algebras(4, Theory::ilb()).size() == 2);
  CHECK(enumerate_algebras(5, Theory::ilb()).size() == 3);
  CHECK(enumerate_algebras(4, Theory::cllb()).size() == 7);
  CHECK(enumerate_algebras(5, Theory::cllb()).size() == 4);
}

TEST_CASE("formula evaluation") {
  Algebra a = chain3();
  Valuation v;
  v.atoms["P"] = {1};
  v.atoms["Q"] = {2};
  std::map<std::string, int> env;
  int out = -1;
  REQUIRE(eval_formula(parse_ill("P * P"), a, v, env, &out));
  CHECK(out == 0);
  REQUIRE(eval_formula(parse_ill("P & Q"), a, v, env, &out));
  CHECK(out == 1);
  REQUIRE(eval_formula(parse_ill("~P"), a, v, env, &out));
  CHECK(out == 1);  // 1 -o 0 in the Lukasiewicz chain
  REQUIRE(eval_formula(parse_ill("!P"), a, v, env, &out));
  CHECK(out == 0);
  REQUIRE(eval_formula(parse_ill("1"), a, v, env, &out));
  CHECK(out == 2);
  REQUIRE(eval_formula(parse_ill("0"), a, v, env, &out));
  CHECK(out == 0);
}

TEST_CASE("quantifiers evaluate as iterated meets and joins") {
  Algebra a = chain3();
  Valuation v;
  v.domain = 2;
  v.atoms["P"] = {1, 2};  // P(d0) = 1, P(d1) = 2
  std::map<std::string, int> env;
  int out = -1;
  REQUIRE(eval_formula(parse_ill("forall x. P(x)"), a, v, env, &out));
  CHECK(out == 1);
  REQUIRE(eval_formula(parse_ill("exists x. P(x)"), a, v, env, &out));
  CHECK(out == 2);
}

TEST_CASE("compound terms are outside the finite search fragment") {
  Algebra a = chain3();
  Valuation v;
  v.atoms["P"] = {1};
  std::map<std::string, int> env;
  int out = -1;
  CHECK(!eval_formula(parse_ill("forall x. P(f(x))"), a, v, env, &out));
}

TEST_CASE("countermodel search refutes non-theorems") {
  ModelBounds mb;
  RefuteResult r = find_countermodel(seq("P |- P * P"), Theory::ill(), mb);
  REQUIRE(r.found());
  CHECK(!r.cm.text().empty());

  CHECK(find_countermodel(seq("~~P |- P"), Theory::ill(), mb).found());
  CHECK(find_countermodel(seq("P |- !P"), Theory::ill(), mb).found());
  CHECK(find_countermodel(seq("P |- !P"), Theory::cllb(), mb).found());
  CHECK(find_countermodel(seq("~~P |- P"), Theory::ilb(), mb).found());
  CHECK(find_countermodel(seq("exists x. P(x) |- forall x. P(x)"), Theory::ill(), mb).found());
}

TEST_CASE("search never refutes a theorem and reports bounded failure honestly") {
  ModelBounds mb;
  mb.max_algebra = 4;
  CHECK(!find_countermodel(seq("P |- P"), Theory::ill(), mb).found());
  CHECK(!find_countermodel(seq("!P |- P * 1"), Theory::ill(), mb).found());
  CHECK(find_countermodel(seq("P |- Q"), Theory::ill(), mb).verdict == SearchVerdict::Found);
  // the pro direction of promotion is valid in every algebra of this class,
  // so the search comes back empty even though the sequent is underivable
  CHECK(find_countermodel(seq("!(P & Q) |- !P * !Q"), Theory::ill(), mb).verdict !=
        SearchVerdict::Found);
}

TEST_CASE("equivalence refutation records the failing direction") {
  ModelBounds mb;
  RefuteResult r = find_countermodel_equiv(parse_ill("P"), parse_ill("!P"), Theory::ill(), mb);
  REQUIRE(r.found());
  CHECK(r.cm.direction == 0);  // P |- !P is the failing direction
  RefuteResult r2 = find_countermodel_equiv(parse_ill("!P"), parse_ill("P"), Theory::ill(), mb);
  REQUIRE(r2.found());
  CHECK(r2.cm.direction == 1);
}

TEST_CASE("soundness bridge: proved sequents are valid in every enumerated algebra") {
  CorpusParams cp;
  cp.count = 60;
  cp.seed = 17;
  cp.quantifiers = false;
  cp.constants = false;
  cp.max_depth = 4;
  Theory th = Theory::ill();
  Budget bud;
  bud.timeout_ms = 2000;
  for (const Formula& f : random_ill(cp)) {
    Sequent s{{}, f};
    ProofResult pr = prove(s, th, bud);
    if (!pr.proved()) continue;
    for (int n = 2; n <= 4; n++) {
      for (const Algebra& alg : enumerate_algebras(n, th)) {
        // every valuation of the (few) atoms
        std::vector<std::string> names = atom_names(f);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        std::vector<int> vals(names.size(), 0);
        bool done = names.empty();
        Valuation v;
        for (;;) {
          v.atoms.clear();
          for (size_t i = 0; i < names.size(); i++) v.atoms[names[i]] = {vals[i]};
          std::map<std::string, int> env;
          int out = -1;
          REQUIRE(eval_formula(f, alg, v, env, &out));
          CHECK(out == alg.top());
          if (done) break;
          size_t i = 0;
          while (i < names.size() && ++vals[i] == alg.n) vals[i++] = 0;
          if (i == names.size()) break;
        }
      }
    }
  }
}
