#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "illtrans.h"

static std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  ilt_string_free(s);
  return out;
}

TEST_CASE("version string") {
  const char* v = ilt_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}

TEST_CASE("parse, print, language") {
  ilt_formula* f = nullptr;
  char* err = nullptr;
  REQUIRE(ilt_parse(ILT_LANG_ILL, "!P -o (Q * R)", &f, &err) == ILT_OK);
  REQUIRE(f != nullptr);
  CHECK(err == nullptr);
  CHECK(ilt_language(f) == ILT_LANG_ILL);
  char* text = nullptr;
  REQUIRE(ilt_print(f, &text) == ILT_OK);
  CHECK(take(text) == "!P -o Q * R");
  ilt_formula_free(f);
}

TEST_CASE("parse errors carry a message and leave the handle NULL") {
  ilt_formula* f = nullptr;
  char* err = nullptr;
  CHECK(ilt_parse(ILT_LANG_ILL, "P **", &f, &err) == ILT_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(take(err).find("offset 3") != std::string::npos);
  // wrong language for the token
  err = nullptr;
  CHECK(ilt_parse(ILT_LANG_IL, "P * Q", &f, &err) == ILT_ERR_PARSE);
  CHECK(f == nullptr);
  ilt_string_free(err);
}

TEST_CASE("translation across languages") {
  ilt_formula* il = nullptr;
  REQUIRE(ilt_parse(ILT_LANG_IL, "(A \\/ B) -> C", &il, nullptr) == ILT_OK);
  ilt_formula* lin = nullptr;
  REQUIRE(ilt_translate(il, "dagger", &lin) == ILT_OK);
  CHECK(ilt_language(lin) == ILT_LANG_ILL);
  char* text = nullptr;
  REQUIRE(ilt_print(lin, &text) == ILT_OK);
  CHECK(take(text) == "A + B -o C");

  // language mismatch and unknown names are argument errors
  ilt_formula* out = nullptr;
  CHECK(ilt_translate(il, "gg", &out) == ILT_ERR_ARG);
  CHECK(out == nullptr);
  CHECK(ilt_translate(lin, "dagger", &out) == ILT_ERR_ARG);
  CHECK(ilt_translate(lin, "no-such", &out) == ILT_ERR_ARG);

  ilt_formula* back = nullptr;
  REQUIRE(ilt_translate(lin, "kuroda", &back) == ILT_OK);
  char* text2 = nullptr;
  REQUIRE(ilt_print(back, &text2) == ILT_OK);
  CHECK(take(text2) == "~~(A + B -o C)");

  ilt_formula_free(il);
  ilt_formula_free(lin);
  ilt_formula_free(back);
}

TEST_CASE("simplification with trace") {
  ilt_formula* f = nullptr;
  REQUIRE(ilt_parse(ILT_LANG_ILL, "~~(~~(~~P & ~~Q) * ~~R)", &f, nullptr) == ILT_OK);
  ilt_formula* out = nullptr;
  char* trace = nullptr;
  REQUIRE(ilt_simplify(f, "gg-from-kolm-outer", &out, &trace) == ILT_OK);
  char* text = nullptr;
  REQUIRE(ilt_print(out, &text) == ILT_OK);
  CHECK(take(text) == "(~~P & ~~Q) * ~~R");
  std::string t = take(trace);
  CHECK(t.find("drop-nn-tensor") != std::string::npos);
  CHECK(t.find("drop-nn-with") != std::string::npos);

  ilt_formula* out2 = nullptr;
  CHECK(ilt_simplify(f, "no-such", &out2, nullptr) == ILT_ERR_ARG);
  CHECK(out2 == nullptr);
  ilt_formula_free(f);
  ilt_formula_free(out);
}

TEST_CASE("proving") {
  char* proof = nullptr;
  char* err = nullptr;
  CHECK(ilt_prove("!P |- P * 1", "ILL", 0, 0, &proof, &err) == ILT_OK);
  CHECK(take(proof).find("|-") != std::string::npos);

  proof = nullptr;
  CHECK(ilt_prove("P |- P * P", "ILL", 0, 0, &proof, &err) == ILT_UNPROVED);
  CHECK(proof == nullptr);
  CHECK(ilt_prove("P |- P * P", "IL_b", 0, 0, &proof, &err) == ILT_OK);
  ilt_string_free(proof);
  proof = nullptr;

  CHECK(ilt_prove("P |- P", "no-such", 0, 0, &proof, &err) == ILT_ERR_ARG);
  CHECK(ilt_prove("P |-", "ILL", 0, 0, &proof, &err) == ILT_ERR_PARSE);
}

TEST_CASE("refuting") {
  char* model = nullptr;
  char* err = nullptr;
  CHECK(ilt_refute("P |- P * P", "ILL", 0, 0, 0, &model, &err) == ILT_OK);
  CHECK(!take(model).empty());
  model = nullptr;
  // a theorem has no countermodel; the search is inconclusive, not a verdict
  CHECK(ilt_refute("P |- P", "ILL", 3, 1, 0, &model, &err) == ILT_INCONCLUSIVE);
  CHECK(model == nullptr);
  CHECK(ilt_refute("P |- P", "no-such", 0, 0, 0, &model, &err) == ILT_ERR_ARG);
}

TEST_CASE("table checking") {
  char* report = nullptr;
  // the bang table has one intentionally open invalid cell
  CHECK(ilt_check_table("bang", &report) == ILT_INCONCLUSIVE);
  std::string t = take(report);
  CHECK(t.find("table bang") != std::string::npos);
  CHECK(t.find("contradictions=0") != std::string::npos);
  report = nullptr;
  CHECK(ilt_check_table("no-such", &report) == ILT_ERR_ARG);
  CHECK(report == nullptr);
}

TEST_CASE("corpus generation is deterministic") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ilt_corpus(ILT_LANG_ILL, 42, 5, 4, 3, &a) == ILT_OK);
  REQUIRE(ilt_corpus(ILT_LANG_ILL, 42, 5, 4, 3, &b) == ILT_OK);
  std::string sa = take(a), sb = take(b);
  CHECK(sa == sb);
  // five lines
  size_t lines = 0;
  for (char c : sa)
    if (c == '\n') lines++;
  CHECK(lines == 5);
  // every line parses back in the same language
  size_t start = 0;
  while (start < sa.size()) {
    size_t end = sa.find('\n', start);
    std::string line = sa.substr(start, end - start);
    ilt_formula* f = nullptr;
    REQUIRE(ilt_parse(ILT_LANG_ILL, line.c_str(), &f, nullptr) == ILT_OK);
    ilt_formula_free(f);
    start = end + 1;
  }
  char* c = nullptr;
  CHECK(ilt_corpus(ILT_LANG_ILL, 1, -3, 4, 3, &c) == ILT_ERR_ARG);
}

TEST_CASE("NULL arguments are argument errors, not crashes") {
  CHECK(ilt_parse(ILT_LANG_ILL, nullptr, nullptr, nullptr) == ILT_ERR_ARG);
  CHECK(ilt_print(nullptr, nullptr) == ILT_ERR_ARG);
  ilt_formula* out = nullptr;
  CHECK(ilt_translate(nullptr, "gg", &out) == ILT_ERR_ARG);
  char* s = nullptr;
  CHECK(ilt_prove(nullptr, "ILL", 0, 0, &s, nullptr) == ILT_ERR_ARG);
  ilt_formula_free(nullptr);
  ilt_string_free(nullptr);
}
