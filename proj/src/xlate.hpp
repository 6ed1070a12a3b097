#pragma once

// The formula translations.  All of them are structurally recursive and
// total; the ones on Formula map the linear language into itself.
//
// Constants (top, 0, 1) are handled like atoms of the corresponding clause
// shape: a translation whose atom clause is P ↦ ~~P also maps 0 to ~~0,
// and so on.  See README for the rationale.

#include <string>

#include "formula.hpp"

namespace illtrans {

enum class TranslationId {
  Dagger,           // IL  -> ILL
  DDagger,          // CLL -> ILL
  Forget,           // ILL -> IL
  KolmOuter,        // ILL -> ILL from here on
  KolmInner,
  GG,
  Kuroda,
  LinGG,
  LinKuroda,
  GirardFullOuter,
  GirardFullInner,
  Star,
  Circ,
  GCirc,
  GStar,
  KuCirc,
  KuStar,
};

// CLI spellings: dagger, ddagger, forget, kolm-outer, kolm-inner, gg,
// kuroda, lgg, lkuroda, gf-outer, gf-inner, star, circ, g-circ, g-star,
// ku-circ, ku-star.
const char* translation_name(TranslationId id);
bool translation_from_name(const std::string& name, TranslationId* out);

enum class Presentation { Outer, Inner };

Formula embed_il(const SourceFormulaIL& a);      // Dagger
Formula embed_cll(const SourceFormulaCLL& a);    // DDagger
SourceFormulaIL forget(const Formula& a);        // Forget

Formula kolmogorov(const Formula& a, Presentation p);
Formula godel_gentzen(const Formula& a);
Formula kuroda(const Formula& a);
Formula linear_godel_gentzen(const Formula& a);
Formula linear_kuroda(const Formula& a);
Formula girard_full(const Formula& a, Presentation p);
Formula girard_star(const Formula& a);
Formula girard_circ(const Formula& a, bool with_outer_bang);

enum class ComposedId { GCirc, GStar, KuCirc, KuStar };
Formula composed(const Formula& a, ComposedId which);

// second(first(a)); both ids must be ILL -> ILL translations, otherwise
// std::invalid_argument.
Formula compose_literal(const Formula& a, TranslationId first, TranslationId second);

// Dispatcher for the ILL -> ILL ids (everything except Dagger, DDagger,
// Forget); std::invalid_argument on the excluded ids.
Formula translate_ill(const Formula& a, TranslationId id);

}  // namespace illtrans
