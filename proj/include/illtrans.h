#ifndef ILLTRANS_H
#define ILLTRANS_H

/*
 * C interface to the translation toolkit.  All objects cross the boundary
 * either as opaque handles (ilt_formula, released with ilt_formula_free)
 * or as malloc'd strings (released with ilt_string_free).  Functions
 * return ILT_OK on success; on error the out-parameters are left NULL and,
 * where an err parameter exists, a message is returned through it.
 *
 * Formula syntax, translation names ("gg", "kuroda", "g-circ", ...),
 * simplification names ("gg-from-kolm-outer", ...), theory names ("ILL",
 * "IL_b", "CLL_b", "CL_b") and table names ("nn", "bang") are documented
 * in the README; they are shared verbatim with the CLI.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ilt_formula ilt_formula;

typedef enum {
  ILT_OK = 0,           /* success / proved / countermodel found */
  ILT_UNPROVED = 1,     /* search space exhausted without a proof */
  ILT_INCONCLUSIVE = 2, /* budget or bounds exhausted; no verdict */
  ILT_ERR_PARSE = 3,
  ILT_ERR_ARG = 4, /* unknown name, wrong language, bad parameter */
  ILT_ERR_INTERNAL = 5
} ilt_status;

typedef enum { ILT_LANG_IL = 0, ILT_LANG_CLL = 1, ILT_LANG_ILL = 2 } ilt_lang;

const char* ilt_version(void);

void ilt_formula_free(ilt_formula* f);
void ilt_string_free(char* s);

ilt_status ilt_parse(ilt_lang lang, const char* text, ilt_formula** out, char** err);
ilt_status ilt_print(const ilt_formula* f, char** out);
ilt_lang ilt_language(const ilt_formula* f);

/* Any translation name; the input language must match the translation
 * ("dagger": IL, "ddagger": CLL, everything else: ILL). */
ilt_status ilt_translate(const ilt_formula* f, const char* translation, ilt_formula** out);

/* Applies the named simplification's rewrite rules to the formula (ILL
 * only).  When trace is non-NULL it receives one line per rule firing. */
ilt_status ilt_simplify(const ilt_formula* f, const char* simplification, ilt_formula** out,
                        char** trace);

/* sequent: "H1, ..., Hn |- C" in ILL syntax.  Returns ILT_OK and the
 * proof tree when proved, ILT_UNPROVED when the bounded search saturates,
 * ILT_INCONCLUSIVE when depth/timeout ran out.  max_depth <= 0 and
 * timeout_ms <= 0 select defaults. */
ilt_status ilt_prove(const char* sequent, const char* theory, int max_depth, int timeout_ms,
                     char** proof_text, char** err);

/* Searches for a finite countermodel of the sequent.  ILT_OK plus the
 * model text when found, ILT_INCONCLUSIVE otherwise (never a proof of
 * underivability).  max_algebra/max_domain/timeout_ms <= 0 select
 * defaults. */
ilt_status ilt_refute(const char* sequent, const char* theory, int max_algebra, int max_domain,
                      int timeout_ms, char** model_text, char** err);

/* table: "nn" or "bang".  Returns ILT_OK when every cell is confirmed or
 * intentionally skipped, ILT_INCONCLUSIVE when some cells stayed open,
 * ILT_UNPROVED when any cell contradicts the expected matrix. */
ilt_status ilt_check_table(const char* table, char** report);

/* Deterministic random formulas, one per line. */
ilt_status ilt_corpus(ilt_lang lang, unsigned long long seed, int count, int max_depth,
                      int atoms, char** out);

/* Runs the full acceptance suite; ILT_OK iff every criterion passes.
 * The report always comes back (one line per criterion). */
ilt_status ilt_selftest(char** report);

#ifdef __cplusplus
}
#endif

#endif /* ILLTRANS_H */
