#include "illtrans.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "acceptance.hpp"
#include "corpus.hpp"
#include "models.hpp"
#include "prover.hpp"
#include "rewrite.hpp"
#include "syntax.hpp"
#include "tables.hpp"
#include "xlate.hpp"

using namespace illtrans;

struct ilt_formula {
  ilt_lang lang;
  Formula ill;
  SourceFormulaIL il;
  SourceFormulaCLL cll;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

bool theory_from_name(const std::string& name, Theory* out) {
  if (name == "ILL") *out = Theory::ill();
  else if (name == "IL_b") *out = Theory::ilb();
  else if (name == "CLL_b") *out = Theory::cllb();
  else if (name == "CL_b") *out = Theory::clb();
  else return false;
  return true;
}

}  // namespace

extern "C" {

const char* ilt_version(void) { return "1.0.0"; }

void ilt_formula_free(ilt_formula* f) { delete f; }

void ilt_string_free(char* s) { std::free(s); }

ilt_status ilt_parse(ilt_lang lang, const char* text, ilt_formula** out, char** err) {
  if (!text || !out) return ILT_ERR_ARG;
  *out = nullptr;
  try {
    auto f = new ilt_formula{lang, {}, {}, {}};
    switch (lang) {
      case ILT_LANG_IL: f->il = parse_il(text); break;
      case ILT_LANG_CLL: f->cll = parse_cll(text); break;
      case ILT_LANG_ILL: f->ill = parse_ill(text); break;
      default:
        delete f;
        return ILT_ERR_ARG;
    }
    *out = f;
    return ILT_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return ILT_ERR_PARSE;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_print(const ilt_formula* f, char** out) {
  if (!f || !out) return ILT_ERR_ARG;
  try {
    switch (f->lang) {
      case ILT_LANG_IL: *out = dup_string(print(f->il)); break;
      case ILT_LANG_CLL: *out = dup_string(print(f->cll)); break;
      default: *out = dup_string(print(f->ill)); break;
    }
    return ILT_OK;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_lang ilt_language(const ilt_formula* f) { return f ? f->lang : ILT_LANG_ILL; }

ilt_status ilt_translate(const ilt_formula* f, const char* translation, ilt_formula** out) {
  if (!f || !translation || !out) return ILT_ERR_ARG;
  *out = nullptr;
  TranslationId id;
  if (!translation_from_name(translation, &id)) return ILT_ERR_ARG;
  try {
    auto r = new ilt_formula{ILT_LANG_ILL, {}, {}, {}};
    if (id == TranslationId::Dagger) {
      if (f->lang != ILT_LANG_IL) { delete r; return ILT_ERR_ARG; }
      r->ill = embed_il(f->il);
    } else if (id == TranslationId::DDagger) {
      if (f->lang != ILT_LANG_CLL) { delete r; return ILT_ERR_ARG; }
      r->ill = embed_cll(f->cll);
    } else if (id == TranslationId::Forget) {
      if (f->lang != ILT_LANG_ILL) { delete r; return ILT_ERR_ARG; }
      r->lang = ILT_LANG_IL;
      r->il = forget(f->ill);
    } else {
      if (f->lang != ILT_LANG_ILL) { delete r; return ILT_ERR_ARG; }
      r->ill = translate_ill(f->ill, id);
    }
    *out = r;
    return ILT_OK;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_simplify(const ilt_formula* f, const char* simplification, ilt_formula** out,
                        char** trace) {
  if (!f || !simplification || !out) return ILT_ERR_ARG;
  *out = nullptr;
  SimplificationId id;
  if (!simplification_from_name(simplification, &id)) return ILT_ERR_ARG;
  if (f->lang != ILT_LANG_ILL) return ILT_ERR_ARG;
  try {
    std::vector<TraceEntry> entries;
    Formula result = apply(f->ill, rules_for(id), strategy_for(id), trace ? &entries : nullptr);
    if (trace) {
      std::string text;
      for (const TraceEntry& e : entries) {
        text += (e.path.empty() ? std::string("root") : e.path) + " " + e.rule + ": " +
                print(e.before) + " => " + print(e.after) + "\n";
      }
      *trace = dup_string(text);
    }
    auto r = new ilt_formula{ILT_LANG_ILL, result, {}, {}};
    *out = r;
    return ILT_OK;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_prove(const char* sequent, const char* theory, int max_depth, int timeout_ms,
                     char** proof_text, char** err) {
  if (!sequent || !theory) return ILT_ERR_ARG;
  Theory th;
  if (!theory_from_name(theory, &th)) {
    set_err(err, "unknown theory; expected ILL, IL_b, CLL_b or CL_b");
    return ILT_ERR_ARG;
  }
  try {
    ParsedSequent ps = parse_sequent(sequent);
    Budget b;
    if (max_depth > 0) b.max_depth = max_depth;
    if (timeout_ms > 0) b.timeout_ms = timeout_ms;
    ProofResult r = prove({ps.hyps, ps.goal}, th, b);
    switch (r.status) {
      case ProofStatus::Proved:
        if (proof_text) *proof_text = dup_string(proof_to_text(*r.tree));
        return ILT_OK;
      case ProofStatus::Saturated:
        return ILT_UNPROVED;
      default:
        return ILT_INCONCLUSIVE;
    }
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return ILT_ERR_PARSE;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_refute(const char* sequent, const char* theory, int max_algebra, int max_domain,
                      int timeout_ms, char** model_text, char** err) {
  if (!sequent || !theory) return ILT_ERR_ARG;
  Theory th;
  if (!theory_from_name(theory, &th)) {
    set_err(err, "unknown theory; expected ILL, IL_b, CLL_b or CL_b");
    return ILT_ERR_ARG;
  }
  try {
    ParsedSequent ps = parse_sequent(sequent);
    ModelBounds b;
    if (max_algebra > 0) b.max_algebra = max_algebra;
    if (max_domain > 0) b.max_domain = max_domain;
    if (timeout_ms > 0) b.timeout_ms = timeout_ms;
    RefuteResult r = find_countermodel({ps.hyps, ps.goal}, th, b);
    if (!r.found()) return ILT_INCONCLUSIVE;
    if (model_text) *model_text = dup_string(r.cm.text());
    return ILT_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return ILT_ERR_PARSE;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_check_table(const char* table, char** report) {
  if (!table) return ILT_ERR_ARG;
  TableId id;
  if (!table_from_name(table, &id)) return ILT_ERR_ARG;
  try {
    TableBounds b;
    TableReport rep = check_table(id, b);
    if (report) *report = dup_string(report_to_text(rep));
    if (rep.contradictions) return ILT_UNPROVED;
    if (rep.unproved_valid || rep.unrefuted_invalid) return ILT_INCONCLUSIVE;
    return ILT_OK;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_corpus(ilt_lang lang, unsigned long long seed, int count, int max_depth,
                      int atoms, char** out) {
  if (!out || count < 0) return ILT_ERR_ARG;
  try {
    CorpusParams p;
    p.seed = seed;
    p.count = (size_t)count;
    if (max_depth > 0) p.max_depth = max_depth;
    if (atoms > 0) p.atoms = atoms;
    std::string text;
    switch (lang) {
      case ILT_LANG_IL:
        for (const SourceFormulaIL& a : random_il(p)) text += print(a) + "\n";
        break;
      case ILT_LANG_CLL:
        for (const SourceFormulaCLL& a : random_cll(p)) text += print(a) + "\n";
        break;
      case ILT_LANG_ILL:
        for (const Formula& a : random_ill(p)) text += print(a) + "\n";
        break;
      default:
        return ILT_ERR_ARG;
    }
    *out = dup_string(text);
    return ILT_OK;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

ilt_status ilt_selftest(char** report) {
  try {
    AcceptanceReport rep = run_acceptance();
    if (report) *report = dup_string(acceptance_to_text(rep));
    return rep.all_passed() ? ILT_OK : ILT_UNPROVED;
  } catch (...) {
    return ILT_ERR_INTERNAL;
  }
}

}  // extern "C"
