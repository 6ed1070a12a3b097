// Command line front end; everything goes through the C API.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "illtrans.h"

namespace {

// exit codes: 0 success/match, 1 mismatch/unproved, 2 usage or parse
// error, 3 inconclusive
int status_to_exit(ilt_status s) {
  switch (s) {
    case ILT_OK: return 0;
    case ILT_UNPROVED: return 1;
    case ILT_INCONCLUSIVE: return 3;
    default: return 2;
  }
}

bool lang_from_name(const std::string& name, ilt_lang* out) {
  if (name == "il") *out = ILT_LANG_IL;
  else if (name == "cll") *out = ILT_LANG_CLL;
  else if (name == "ill") *out = ILT_LANG_ILL;
  else return false;
  return true;
}

void print_and_free(char* s) {
  if (!s) return;
  std::fputs(s, stdout);
  ilt_string_free(s);
}

int cmd_translate(const std::string& to, const std::string& lang_name,
                  const std::string& formula) {
  ilt_lang lang;
  if (!lang_name.empty()) {
    if (!lang_from_name(lang_name, &lang)) {
      std::fprintf(stderr, "unknown language '%s'\n", lang_name.c_str());
      return 2;
    }
  } else {
    lang = to == "dagger" ? ILT_LANG_IL : to == "ddagger" ? ILT_LANG_CLL : ILT_LANG_ILL;
  }
  ilt_formula* in = nullptr;
  char* err = nullptr;
  ilt_status s = ilt_parse(lang, formula.c_str(), &in, &err);
  if (s != ILT_OK) {
    if (err) std::fprintf(stderr, "%s\n", err);
    ilt_string_free(err);
    return status_to_exit(s);
  }
  ilt_formula* out = nullptr;
  s = ilt_translate(in, to.c_str(), &out);
  ilt_formula_free(in);
  if (s != ILT_OK) {
    std::fprintf(stderr, "translation failed (unknown id or wrong input language)\n");
    return status_to_exit(s);
  }
  char* text = nullptr;
  ilt_print(out, &text);
  ilt_formula_free(out);
  print_and_free(text);
  std::fputs("\n", stdout);
  return 0;
}

int cmd_simplify(const std::string& id, bool trace, const std::string& formula) {
  ilt_formula* in = nullptr;
  char* err = nullptr;
  ilt_status s = ilt_parse(ILT_LANG_ILL, formula.c_str(), &in, &err);
  if (s != ILT_OK) {
    if (err) std::fprintf(stderr, "%s\n", err);
    ilt_string_free(err);
    return status_to_exit(s);
  }
  ilt_formula* out = nullptr;
  char* trace_text = nullptr;
  s = ilt_simplify(in, id.c_str(), &out, trace ? &trace_text : nullptr);
  ilt_formula_free(in);
  if (s != ILT_OK) {
    std::fprintf(stderr, "simplification failed (unknown id?)\n");
    return status_to_exit(s);
  }
  if (trace_text) print_and_free(trace_text);
  char* text = nullptr;
  ilt_print(out, &text);
  ilt_formula_free(out);
  print_and_free(text);
  std::fputs("\n", stdout);
  return 0;
}

int cmd_prove(const std::string& sequent, const std::string& theory, int depth, int timeout_ms,
              bool quiet) {
  char* proof = nullptr;
  char* err = nullptr;
  ilt_status s = ilt_prove(sequent.c_str(), theory.c_str(), depth, timeout_ms,
                           quiet ? nullptr : &proof, &err);
  if (err) {
    std::fprintf(stderr, "%s\n", err);
    ilt_string_free(err);
  }
  switch (s) {
    case ILT_OK:
      std::printf("result=proved theory=%s\n", theory.c_str());
      print_and_free(proof);
      break;
    case ILT_UNPROVED:
      std::printf("result=unproved theory=%s (search saturated)\n", theory.c_str());
      break;
    case ILT_INCONCLUSIVE:
      std::printf("result=inconclusive theory=%s (budget exhausted)\n", theory.c_str());
      break;
    default:
      break;
  }
  return status_to_exit(s);
}

int cmd_refute(const std::string& sequent, const std::string& theory, int max_algebra,
               int max_domain, int timeout_ms) {
  char* model = nullptr;
  char* err = nullptr;
  ilt_status s = ilt_refute(sequent.c_str(), theory.c_str(), max_algebra, max_domain,
                            timeout_ms, &model, &err);
  if (err) {
    std::fprintf(stderr, "%s\n", err);
    ilt_string_free(err);
  }
  if (s == ILT_OK) {
    std::printf("result=refuted theory=%s\n", theory.c_str());
    print_and_free(model);
  } else if (s == ILT_INCONCLUSIVE) {
    std::printf("result=inconclusive theory=%s (no countermodel within bounds)\n",
                theory.c_str());
  }
  return status_to_exit(s);
}

int cmd_check_tables(const std::string& table) {
  char* report = nullptr;
  ilt_status s = ilt_check_table(table.c_str(), &report);
  if (s == ILT_ERR_ARG) {
    std::fprintf(stderr, "unknown table '%s' (expected nn or bang)\n", table.c_str());
    return 2;
  }
  print_and_free(report);
  return status_to_exit(s);
}

int cmd_corpus(const std::string& lang_name, unsigned long long seed, int count, int depth,
               int atoms) {
  ilt_lang lang;
  if (!lang_from_name(lang_name, &lang)) {
    std::fprintf(stderr, "unknown language '%s'\n", lang_name.c_str());
    return 2;
  }
  char* out = nullptr;
  ilt_status s = ilt_corpus(lang, seed, count, depth, atoms, &out);
  print_and_free(out);
  return status_to_exit(s);
}

int cmd_selftest() {
  char* report = nullptr;
  ilt_status s = ilt_selftest(&report);
  print_and_free(report);
  return s == ILT_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translations between classical, intuitionistic and linear logic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ilt_version()));

  std::string formula, sequent, to, id, lang = "", theory = "ILL", table;
  bool trace = false, quiet = false;
  int depth = 0, timeout_ms = 0, max_algebra = 0, max_domain = 0, count = 10, cdepth = 4,
      atoms = 3;
  unsigned long long seed = 1;

  auto* t = app.add_subcommand("translate", "apply a named translation to a formula");
  t->add_option("--to", to, "translation id (dagger, ddagger, forget, kolm-outer, kolm-inner, gg, kuroda, lgg, lkuroda, gf-outer, gf-inner, star, circ, g-circ, g-star, ku-circ, ku-star)")->required();
  t->add_option("--lang", lang, "input language: il, cll, ill (default inferred)");
  t->add_option("formula", formula, "input formula")->required();

  auto* si = app.add_subcommand("simplify", "run a simplification rule set over a formula");
  si->add_option("--id", id, "simplification id (gg-from-kolm-outer, kuroda-from-kolm-inner, star-from-gf-outer, circ-from-gf-inner, lgg-from-kolm-outer, lkuroda-from-kolm-inner)")->required();
  si->add_flag("--trace", trace, "print each rule firing");
  si->add_option("formula", formula, "input formula (ILL)")->required();

  auto* pr = app.add_subcommand("prove", "bounded proof search for a sequent");
  pr->add_option("--theory", theory, "ILL, IL_b, CLL_b or CL_b");
  pr->add_option("--depth", depth, "maximum proof depth");
  pr->add_option("--timeout-ms", timeout_ms, "search timeout");
  pr->add_flag("--quiet", quiet, "suppress the proof tree");
  pr->add_option("sequent", sequent, "\"H1, ..., Hn |- C\"")->required();

  auto* rf = app.add_subcommand("refute", "finite countermodel search for a sequent");
  rf->add_option("--theory", theory, "ILL, IL_b, CLL_b or CL_b");
  rf->add_option("--max-algebra", max_algebra, "largest algebra size");
  rf->add_option("--max-domain", max_domain, "largest quantifier domain");
  rf->add_option("--timeout-ms", timeout_ms, "search timeout");
  rf->add_option("sequent", sequent, "\"H1, ..., Hn |- C\"")->required();

  auto* ct = app.add_subcommand("check-tables", "check an equivalence matrix");
  ct->add_option("table", table, "nn or bang")->required();

  auto* co = app.add_subcommand("corpus", "generate deterministic random formulas");
  co->add_option("--count", count, "number of formulas");
  co->add_option("--depth", cdepth, "maximum formula depth");
  co->add_option("--atoms", atoms, "number of distinct atoms");
  co->add_option("--seed", seed, "random seed");
  co->add_option("--lang", lang, "il, cll or ill (default ill)");

  app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (t->parsed()) return cmd_translate(to, lang, formula);
  if (si->parsed()) return cmd_simplify(id, trace, formula);
  if (pr->parsed()) return cmd_prove(sequent, theory, depth, timeout_ms, quiet);
  if (rf->parsed()) return cmd_refute(sequent, theory, max_algebra, max_domain, timeout_ms);
  if (ct->parsed()) return cmd_check_tables(table);
  if (co->parsed()) return cmd_corpus(lang.empty() ? "ill" : lang, seed, count, cdepth, atoms);
  return cmd_selftest();
}
