#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "corpus.hpp"
#include "syntax.hpp"
#include "xlate.hpp"

using namespace illtrans;

// All goldens below were computed by hand from the defining clauses and
// frozen; the tests compare ASTs, so the spelling of the expected strings
// is irrelevant beyond parsing.
static void expect(Formula got, const char* expected) {
  CHECK(print(got) == print(parse_ill(expected)));
  CHECK(got == parse_ill(expected));
}

TEST_CASE("embedding of the intuitionistic language") {
  expect(embed_il(parse_il("(A \\/ B) -> C")), "A + B -o C");
  expect(embed_il(parse_il("A /\\ B")), "A & B");
  expect(embed_il(parse_il("bot")), "0");
  expect(embed_il(parse_il("top")), "top");
  expect(embed_il(parse_il("forall x. P(x) -> Q")), "forall x. (P(x) -o Q)");
}

TEST_CASE("embedding of the classical linear language") {
  expect(embed_cll(parse_cll("!P par ?Q")), "~(~!P * ~?Q)");
  expect(embed_cll(parse_cll("bot")), "0");
  expect(embed_cll(parse_cll("P * (Q & R)")), "P * (Q & R)");
  expect(embed_cll(parse_cll("?P")), "?P");
}

TEST_CASE("forgetting the linear structure") {
  CHECK(forget(parse_ill("!P * (Q -o 0)")) == parse_il("P /\\ (Q -> bot)"));
  CHECK(forget(parse_ill("P & Q")) == parse_il("P /\\ Q"));
  CHECK(forget(parse_ill("P + Q")) == parse_il("P \\/ Q"));
  CHECK(forget(parse_ill("1")) == parse_il("top"));
  CHECK(forget(parse_ill("top")) == parse_il("top"));
}

TEST_CASE("forget undoes the intuitionistic embedding") {
  CorpusParams cp;
  cp.count = 120;
  cp.seed = 5;
  for (const SourceFormulaIL& f : random_il(cp)) {
    CHECK(forget(embed_il(f)) == f);
  }
}

TEST_CASE("double negation translation goldens") {
  Formula a = parse_ill("(P * Q) -o forall x. (R(x) + S)");
  expect(kolmogorov(a, Presentation::Outer),
         "~~(~~(~~P * ~~Q) -o ~~(forall x. ~~(~~R(x) + ~~S)))");
  expect(godel_gentzen(a), "(~~P * ~~Q) -o forall x. ~~(~~R(x) + ~~S)");
  expect(kuroda(a), "~~((P * Q) -o forall x. ~~(R(x) + S))");
  expect(linear_godel_gentzen(a), "~~(~~P * ~~Q) -o forall x. ~~(~~R(x) + ~~S)");
  expect(linear_kuroda(a), "~~((P * Q) -o ~~(forall x. ~~(R(x) + S)))");

  Formula b = parse_ill("!P & (exists x. Q(x))");
  expect(kolmogorov(b, Presentation::Outer), "~~(~?~P & ~~(exists x. ~~Q(x)))");
  expect(godel_gentzen(b), "!~~P & ~~(exists x. ~~Q(x))");
  expect(kuroda(b), "~~(!P & (exists x. Q(x)))");
  expect(linear_godel_gentzen(b), "~~!~~P & ~~(exists x. ~~Q(x))");
  expect(linear_kuroda(b), "~~(~?~P & ~~(exists x. Q(x)))");
}

TEST_CASE("exponential translation goldens") {
  Formula a = parse_ill("(P * Q) -o forall x. (R(x) + S)");
  expect(girard_full(a, Presentation::Outer), "!(!(!P * !Q) -o !(forall x. !(!R(x) + !S)))");
  expect(girard_star(a), "!((!P * !Q) -o !(forall x. (!R(x) + !S)))");
  expect(girard_circ(a, true), "!(!(!P * !Q) -o forall x. (!R(x) + !S))");
  expect(girard_circ(a, false), "!(!P * !Q) -o forall x. (!R(x) + !S)");

  Formula b = parse_ill("!P & (exists x. Q(x))");
  expect(girard_full(b, Presentation::Outer), "!(!!!P & !(exists x. !Q(x)))");
  expect(girard_star(b), "!(!!P & (exists x. !Q(x)))");
  expect(girard_circ(b, true), "!(!P & (exists x. !Q(x)))");
}

TEST_CASE("composed translation goldens") {
  Formula b = parse_ill("!P & (exists x. Q(x))");
  expect(composed(b, ComposedId::GCirc), "!(!?!P & ?(exists x. !?!Q(x)))");
  expect(composed(b, ComposedId::GStar), "!(!!?!P & !?(exists x. !?!Q(x)))");
  expect(composed(b, ComposedId::KuCirc), "!?!(!!P & !(exists x. !Q(x)))");
  expect(composed(b, ComposedId::KuStar), "!?!(!!P & (exists x. !Q(x)))");
}

TEST_CASE("the four composed translations agree on atoms") {
  Formula p = parse_ill("P");
  Formula expected = parse_ill("!?!P");
  for (ComposedId id : {ComposedId::GCirc, ComposedId::GStar, ComposedId::KuCirc,
                        ComposedId::KuStar}) {
    CHECK(composed(p, id) == expected);
  }
}

TEST_CASE("constants translate like atoms") {
  expect(godel_gentzen(parse_ill("1")), "~~1");
  expect(kuroda(parse_ill("0")), "~~0");
  expect(girard_star(parse_ill("top")), "!top");
  expect(girard_circ(parse_ill("1"), true), "!1");
}

TEST_CASE("outer and inner presentations coincide syntactically") {
  CorpusParams cp;
  cp.count = 200;
  cp.seed = 7;
  for (const Formula& f : random_ill(cp)) {
    CHECK(kolmogorov(f, Presentation::Outer) == kolmogorov(f, Presentation::Inner));
    CHECK(girard_full(f, Presentation::Outer) == girard_full(f, Presentation::Inner));
  }
}

TEST_CASE("dispatcher and literal composition") {
  CorpusParams cp;
  cp.count = 100;
  cp.seed = 9;
  for (const Formula& f : random_ill(cp)) {
    CHECK(translate_ill(f, TranslationId::GCirc) == composed(f, ComposedId::GCirc));
    CHECK(translate_ill(f, TranslationId::KuStar) == composed(f, ComposedId::KuStar));
    CHECK(compose_literal(f, TranslationId::Kuroda, TranslationId::Star) ==
          girard_star(kuroda(f)));
  }
}

TEST_CASE("name round trips") {
  const char* names[] = {"dagger",  "ddagger", "forget",  "kolm-outer", "kolm-inner", "gg",
                         "kuroda",  "lgg",     "lkuroda", "gf-outer",   "gf-inner",   "star",
                         "circ",    "g-circ",  "g-star",  "ku-circ",    "ku-star"};
  for (const char* n : names) {
    TranslationId id;
    REQUIRE(translation_from_name(n, &id));
    CHECK(translation_name(id) == std::string(n));
  }
  TranslationId id;
  CHECK(!translation_from_name("girard", &id));
}

TEST_CASE("literal composition rejects the cross-language ids") {
  Formula p = parse_ill("P");
  CHECK_THROWS_AS(compose_literal(p, TranslationId::Dagger, TranslationId::Circ),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose_literal(p, TranslationId::GG, TranslationId::Forget),
                  std::invalid_argument);
  CHECK_THROWS_AS(translate_ill(p, TranslationId::DDagger), std::invalid_argument);
  CHECK(translate_ill(p, TranslationId::Kuroda) == kuroda(p));
}
