#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "rewrite.hpp"
#include "syntax.hpp"

using namespace illtrans;

TEST_CASE("worked example: outside pass turns the full translation into the optimized one") {
  Formula src = parse_ill("(P & Q) * R");
  Formula full = source_translation(SimplificationId::GGfromKolmO, src);
  CHECK(full == parse_ill("~~(~~(~~P & ~~Q) * ~~R)"));

  std::vector<TraceEntry> trace;
  Formula out = apply(full, rules_for(SimplificationId::GGfromKolmO), Strategy::Outside, &trace);
  CHECK(out == parse_ill("(~~P & ~~Q) * ~~R"));
  CHECK(out == target_translation(SimplificationId::GGfromKolmO, src));

  REQUIRE(trace.size() == 2);
  CHECK(trace[0].path == "");
  CHECK(trace[0].rule == "drop-nn-tensor");
  CHECK(trace[1].rule == "drop-nn-with");
  CHECK(trace[0].before == full);
  CHECK(trace[1].after == parse_ill("~~P & ~~Q"));
}

TEST_CASE("strategy order matters: the inside pass gives a different normal form here") {
  Formula full = parse_ill("~~(~~(~~P & ~~Q) * ~~R)");
  Formula in = apply(full, rules_for(SimplificationId::GGfromKolmO), Strategy::Inside);
  CHECK(in == parse_ill("~~((~~P & ~~Q) * ~~R)"));
  CHECK(in != apply(full, rules_for(SimplificationId::GGfromKolmO), Strategy::Outside));
}

TEST_CASE("each position fires at most one rule, first match wins") {
  // root matches both a with and a bang pattern chain; only one fires
  Formula f = parse_ill("~~(!(~~P))");
  std::vector<TraceEntry> trace;
  Formula out = apply(f, rules_for(SimplificationId::GGfromKolmO), Strategy::Outside, &trace);
  CHECK(out == parse_ill("!(~~P)"));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].rule == "drop-nn-bang");
}

TEST_CASE("quantifier patterns match any bound variable name") {
  Formula f = parse_ill("~~(forall z. ~~P(z))");
  Formula out = apply(f, rules_for(SimplificationId::GGfromKolmO), Strategy::Outside);
  CHECK(out == parse_ill("forall z. ~~P(z)"));
}

TEST_CASE("simplification names round trip") {
  const char* names[] = {"gg-from-kolm-outer", "kuroda-from-kolm-inner", "star-from-gf-outer",
                         "circ-from-gf-inner", "lgg-from-kolm-outer",    "lkuroda-from-kolm-inner"};
  for (const char* n : names) {
    SimplificationId id;
    REQUIRE(simplification_from_name(n, &id));
    CHECK(simplification_name(id) == std::string(n));
  }
  SimplificationId id;
  CHECK(!simplification_from_name("gg", &id));
}

static const SimplificationId kAllIds[] = {
    SimplificationId::GGfromKolmO,  SimplificationId::KurodaFromKolmI,
    SimplificationId::StarFromGfO,  SimplificationId::CircFromGfI,
    SimplificationId::LinGGfromKolmO, SimplificationId::LinKurodaFromKolmI,
};

TEST_CASE("every simplification reaches its target translation on a random corpus") {
  CorpusParams cp;
  cp.count = 250;
  cp.seed = 3;
  std::vector<Formula> corpus = random_ill(cp);
  for (SimplificationId id : kAllIds) {
    SimplificationReport rep = check_simplification(id, corpus);
    CHECK(rep.failures == 0);
    REQUIRE(rep.rows.size() == corpus.size());
    for (const auto& row : rep.rows) {
      CHECK(row.ok);
      CHECK(row.got == row.expected);
    }
  }
}

TEST_CASE("structure-guided pass agrees with the positional one for the ~~ rule sets") {
  CorpusParams cp;
  cp.count = 200;
  cp.seed = 21;
  std::vector<Formula> corpus = random_ill(cp);
  for (SimplificationId id : {SimplificationId::GGfromKolmO, SimplificationId::KurodaFromKolmI,
                              SimplificationId::StarFromGfO, SimplificationId::LinGGfromKolmO,
                              SimplificationId::LinKurodaFromKolmI}) {
    for (const Formula& f : corpus) {
      Formula full = source_translation(id, f);
      CHECK(apply_along(id, f) == apply(full, rules_for(id), strategy_for(id)));
    }
  }
}

TEST_CASE("positional walk over-fires inside nested ! stacks; the guided pass does not") {
  // Source !!P translates to !!!!!P; the guided pass reaches the optimized
  // form !!!P, while a positional inside walk also fires in the middle of
  // the stack and collapses it too far.
  SimplificationId id = SimplificationId::CircFromGfI;
  Formula src = parse_ill("!!P");
  Formula full = source_translation(id, src);
  CHECK(full == parse_ill("!!!!!P"));
  Formula target = target_translation(id, src);
  CHECK(target == parse_ill("!!!P"));
  CHECK(apply_along(id, src) == target);
  Formula positional = apply(full, rules_for(id), strategy_for(id));
  CHECK(positional == parse_ill("!!P"));
  CHECK(positional != target);
}
