#include "xlate.hpp"

#include <stdexcept>

namespace illtrans {

namespace {

struct NameEntry {
  TranslationId id;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {TranslationId::Dagger, "dagger"},
    {TranslationId::DDagger, "ddagger"},
    {TranslationId::Forget, "forget"},
    {TranslationId::KolmOuter, "kolm-outer"},
    {TranslationId::KolmInner, "kolm-inner"},
    {TranslationId::GG, "gg"},
    {TranslationId::Kuroda, "kuroda"},
    {TranslationId::LinGG, "lgg"},
    {TranslationId::LinKuroda, "lkuroda"},
    {TranslationId::GirardFullOuter, "gf-outer"},
    {TranslationId::GirardFullInner, "gf-inner"},
    {TranslationId::Star, "star"},
    {TranslationId::Circ, "circ"},
    {TranslationId::GCirc, "g-circ"},
    {TranslationId::GStar, "g-star"},
    {TranslationId::KuCirc, "ku-circ"},
    {TranslationId::KuStar, "ku-star"},
};

}  // namespace

const char* translation_name(TranslationId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "?";
}

bool translation_from_name(const std::string& name, TranslationId* out) {
  for (const auto& e : kNames) {
    if (name == e.name) {
      *out = e.id;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Embeddings

Formula embed_il(const SourceFormulaIL& a) {
  switch (a.tag()) {
    case ILConn::Atom:
      return Formula::atom(a.atom_name(), a.atom_args());
    case ILConn::Bot:
      return Formula::zero();
    case ILConn::Top:
      return Formula::top();
    case ILConn::And:
      return Formula::with(embed_il(a.left()), embed_il(a.right()));
    case ILConn::Or:
      return Formula::plus(embed_il(a.left()), embed_il(a.right()));
    case ILConn::Imp:
      return Formula::lolli(embed_il(a.left()), embed_il(a.right()));
    case ILConn::Forall:
      return Formula::forall(a.var(), embed_il(a.body()));
    case ILConn::Exists:
      return Formula::exists(a.var(), embed_il(a.body()));
  }
  throw std::logic_error("bad IL tag");
}

Formula embed_cll(const SourceFormulaCLL& a) {
  switch (a.tag()) {
    case CLLConn::Atom:
      return Formula::atom(a.atom_name(), a.atom_args());
    case CLLConn::Top:
      return Formula::top();
    case CLLConn::Zero:
      return Formula::zero();
    case CLLConn::One:
      return Formula::one();
    case CLLConn::Bot:
      return Formula::zero();
    case CLLConn::Tensor:
      return Formula::tensor(embed_cll(a.left()), embed_cll(a.right()));
    case CLLConn::With:
      return Formula::with(embed_cll(a.left()), embed_cll(a.right()));
    case CLLConn::Plus:
      return Formula::plus(embed_cll(a.left()), embed_cll(a.right()));
    case CLLConn::Par:
      return neg(Formula::tensor(neg(embed_cll(a.left())), neg(embed_cll(a.right()))));
    case CLLConn::Bang:
      return Formula::bang(embed_cll(a.right()));
    case CLLConn::Quest:
      return quest(embed_cll(a.right()));
    case CLLConn::Forall:
      return Formula::forall(a.var(), embed_cll(a.body()));
    case CLLConn::Exists:
      return Formula::exists(a.var(), embed_cll(a.body()));
  }
  throw std::logic_error("bad CLL tag");
}

SourceFormulaIL forget(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
      return SourceFormulaIL::atom(a.atom_name(), a.atom_args());
    case Conn::Top:
    case Conn::One:
      return SourceFormulaIL::top();
    case Conn::Zero:
      return SourceFormulaIL::bot();
    case Conn::Tensor:
    case Conn::With:
      return SourceFormulaIL::and_(forget(a.left()), forget(a.right()));
    case Conn::Plus:
      return SourceFormulaIL::or_(forget(a.left()), forget(a.right()));
    case Conn::Lolli:
      return SourceFormulaIL::imp(forget(a.left()), forget(a.right()));
    case Conn::Bang:
      return forget(a.right());
    case Conn::Forall:
      return SourceFormulaIL::forall(a.var(), forget(a.body()));
    case Conn::Exists:
      return SourceFormulaIL::exists(a.var(), forget(a.body()));
  }
  throw std::logic_error("bad tag");
}

// ---------------------------------------------------------------------------
// Negative translations

Formula kolmogorov(const Formula& a, Presentation p) {
  if (p == Presentation::Outer) {
    switch (a.tag()) {
      case Conn::Atom:
      case Conn::Top:
      case Conn::Zero:
      case Conn::One:
        return neg(neg(a));
      case Conn::Tensor:
        return neg(neg(Formula::tensor(kolmogorov(a.left(), p), kolmogorov(a.right(), p))));
      case Conn::With:
        return neg(neg(Formula::with(kolmogorov(a.left(), p), kolmogorov(a.right(), p))));
      case Conn::Plus:
        return neg(neg(Formula::plus(kolmogorov(a.left(), p), kolmogorov(a.right(), p))));
      case Conn::Lolli:
        return neg(neg(Formula::lolli(kolmogorov(a.left(), p), kolmogorov(a.right(), p))));
      case Conn::Bang:
        return neg(neg(Formula::bang(kolmogorov(a.right(), p))));
      case Conn::Forall:
        return neg(neg(Formula::forall(a.var(), kolmogorov(a.body(), p))));
      case Conn::Exists:
        return neg(neg(Formula::exists(a.var(), kolmogorov(a.body(), p))));
    }
    throw std::logic_error("bad tag");
  }
  // inner presentation: ~~core, core re-wrapping each subformula
  struct Core {
    static Formula run(const Formula& a) {
      switch (a.tag()) {
        case Conn::Atom:
        case Conn::Top:
        case Conn::Zero:
        case Conn::One:
          return a;
        case Conn::Tensor:
          return Formula::tensor(neg(neg(run(a.left()))), neg(neg(run(a.right()))));
        case Conn::With:
          return Formula::with(neg(neg(run(a.left()))), neg(neg(run(a.right()))));
        case Conn::Plus:
          return Formula::plus(neg(neg(run(a.left()))), neg(neg(run(a.right()))));
        case Conn::Lolli:
          return Formula::lolli(neg(neg(run(a.left()))), neg(neg(run(a.right()))));
        case Conn::Bang:
          return Formula::bang(neg(neg(run(a.right()))));
        case Conn::Forall:
          return Formula::forall(a.var(), neg(neg(run(a.body()))));
        case Conn::Exists:
          return Formula::exists(a.var(), neg(neg(run(a.body()))));
      }
      throw std::logic_error("bad tag");
    }
  };
  return neg(neg(Core::run(a)));
}

Formula godel_gentzen(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return neg(neg(a));
    case Conn::Tensor:
      return Formula::tensor(godel_gentzen(a.left()), godel_gentzen(a.right()));
    case Conn::With:
      return Formula::with(godel_gentzen(a.left()), godel_gentzen(a.right()));
    case Conn::Plus:
      return neg(neg(Formula::plus(godel_gentzen(a.left()), godel_gentzen(a.right()))));
    case Conn::Lolli:
      return Formula::lolli(godel_gentzen(a.left()), godel_gentzen(a.right()));
    case Conn::Bang:
      return Formula::bang(godel_gentzen(a.right()));
    case Conn::Forall:
      return Formula::forall(a.var(), godel_gentzen(a.body()));
    case Conn::Exists:
      return neg(neg(Formula::exists(a.var(), godel_gentzen(a.body()))));
  }
  throw std::logic_error("bad tag");
}

static Formula kuroda_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return a;
    case Conn::Tensor:
      return Formula::tensor(kuroda_core(a.left()), kuroda_core(a.right()));
    case Conn::With:
      return Formula::with(kuroda_core(a.left()), kuroda_core(a.right()));
    case Conn::Plus:
      return Formula::plus(kuroda_core(a.left()), kuroda_core(a.right()));
    case Conn::Lolli:
      return Formula::lolli(kuroda_core(a.left()), kuroda_core(a.right()));
    case Conn::Bang:
      return Formula::bang(kuroda_core(a.right()));
    case Conn::Forall:
      return Formula::forall(a.var(), neg(neg(kuroda_core(a.body()))));
    case Conn::Exists:
      return Formula::exists(a.var(), kuroda_core(a.body()));
  }
  throw std::logic_error("bad tag");
}

Formula kuroda(const Formula& a) { return neg(neg(kuroda_core(a))); }

Formula linear_godel_gentzen(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return neg(neg(a));
    case Conn::Tensor:
      return neg(neg(Formula::tensor(linear_godel_gentzen(a.left()),
                                     linear_godel_gentzen(a.right()))));
    case Conn::With:
      return Formula::with(linear_godel_gentzen(a.left()), linear_godel_gentzen(a.right()));
    case Conn::Plus:
      return neg(neg(Formula::plus(linear_godel_gentzen(a.left()),
                                   linear_godel_gentzen(a.right()))));
    case Conn::Lolli:
      return Formula::lolli(linear_godel_gentzen(a.left()), linear_godel_gentzen(a.right()));
    case Conn::Bang:
      return neg(neg(Formula::bang(linear_godel_gentzen(a.right()))));
    case Conn::Forall:
      return Formula::forall(a.var(), linear_godel_gentzen(a.body()));
    case Conn::Exists:
      return neg(neg(Formula::exists(a.var(), linear_godel_gentzen(a.body()))));
  }
  throw std::logic_error("bad tag");
}

static Formula linear_kuroda_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return a;
    case Conn::Tensor:
      return Formula::tensor(linear_kuroda_core(a.left()), linear_kuroda_core(a.right()));
    case Conn::With:
      return Formula::with(neg(neg(linear_kuroda_core(a.left()))),
                           neg(neg(linear_kuroda_core(a.right()))));
    case Conn::Plus:
      return Formula::plus(linear_kuroda_core(a.left()), linear_kuroda_core(a.right()));
    case Conn::Lolli:
      return Formula::lolli(linear_kuroda_core(a.left()),
                            neg(neg(linear_kuroda_core(a.right()))));
    case Conn::Bang:
      return Formula::bang(neg(neg(linear_kuroda_core(a.right()))));
    case Conn::Forall:
      return Formula::forall(a.var(), neg(neg(linear_kuroda_core(a.body()))));
    case Conn::Exists:
      return Formula::exists(a.var(), linear_kuroda_core(a.body()));
  }
  throw std::logic_error("bad tag");
}

Formula linear_kuroda(const Formula& a) { return neg(neg(linear_kuroda_core(a))); }

// ---------------------------------------------------------------------------
// Girard translations

Formula girard_full(const Formula& a, Presentation p) {
  if (p == Presentation::Outer) {
    switch (a.tag()) {
      case Conn::Atom:
      case Conn::Top:
      case Conn::Zero:
      case Conn::One:
        return Formula::bang(a);
      case Conn::Tensor:
        return Formula::bang(
            Formula::tensor(girard_full(a.left(), p), girard_full(a.right(), p)));
      case Conn::With:
        return Formula::bang(Formula::with(girard_full(a.left(), p), girard_full(a.right(), p)));
      case Conn::Plus:
        return Formula::bang(Formula::plus(girard_full(a.left(), p), girard_full(a.right(), p)));
      case Conn::Lolli:
        return Formula::bang(
            Formula::lolli(girard_full(a.left(), p), girard_full(a.right(), p)));
      case Conn::Bang:
        return Formula::bang(Formula::bang(girard_full(a.right(), p)));
      case Conn::Forall:
        return Formula::bang(Formula::forall(a.var(), girard_full(a.body(), p)));
      case Conn::Exists:
        return Formula::bang(Formula::exists(a.var(), girard_full(a.body(), p)));
    }
    throw std::logic_error("bad tag");
  }
  struct Core {
    static Formula run(const Formula& a) {
      switch (a.tag()) {
        case Conn::Atom:
        case Conn::Top:
        case Conn::Zero:
        case Conn::One:
          return a;
        case Conn::Tensor:
          return Formula::tensor(Formula::bang(run(a.left())), Formula::bang(run(a.right())));
        case Conn::With:
          return Formula::with(Formula::bang(run(a.left())), Formula::bang(run(a.right())));
        case Conn::Plus:
          return Formula::plus(Formula::bang(run(a.left())), Formula::bang(run(a.right())));
        case Conn::Lolli:
          return Formula::lolli(Formula::bang(run(a.left())), Formula::bang(run(a.right())));
        case Conn::Bang:
          return Formula::bang(Formula::bang(run(a.right())));
        case Conn::Forall:
          return Formula::forall(a.var(), Formula::bang(run(a.body())));
        case Conn::Exists:
          return Formula::exists(a.var(), Formula::bang(run(a.body())));
      }
      throw std::logic_error("bad tag");
    }
  };
  return Formula::bang(Core::run(a));
}

Formula girard_star(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return Formula::bang(a);
    case Conn::Tensor:
      return Formula::tensor(girard_star(a.left()), girard_star(a.right()));
    case Conn::With:
      return Formula::bang(Formula::with(girard_star(a.left()), girard_star(a.right())));
    case Conn::Plus:
      return Formula::plus(girard_star(a.left()), girard_star(a.right()));
    case Conn::Lolli:
      return Formula::bang(Formula::lolli(girard_star(a.left()), girard_star(a.right())));
    case Conn::Bang:
      return Formula::bang(girard_star(a.right()));
    case Conn::Forall:
      return Formula::bang(Formula::forall(a.var(), girard_star(a.body())));
    case Conn::Exists:
      return Formula::exists(a.var(), girard_star(a.body()));
  }
  throw std::logic_error("bad tag");
}

static Formula girard_circ_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return a;
    case Conn::Tensor:
      return Formula::tensor(Formula::bang(girard_circ_core(a.left())),
                             Formula::bang(girard_circ_core(a.right())));
    case Conn::With:
      return Formula::with(girard_circ_core(a.left()), girard_circ_core(a.right()));
    case Conn::Plus:
      return Formula::plus(Formula::bang(girard_circ_core(a.left())),
                           Formula::bang(girard_circ_core(a.right())));
    case Conn::Lolli:
      return Formula::lolli(Formula::bang(girard_circ_core(a.left())),
                            girard_circ_core(a.right()));
    case Conn::Bang:
      return Formula::bang(girard_circ_core(a.right()));
    case Conn::Forall:
      return Formula::forall(a.var(), girard_circ_core(a.body()));
    case Conn::Exists:
      return Formula::exists(a.var(), Formula::bang(girard_circ_core(a.body())));
  }
  throw std::logic_error("bad tag");
}

Formula girard_circ(const Formula& a, bool with_outer_bang) {
  Formula core = girard_circ_core(a);
  return with_outer_bang ? Formula::bang(core) : core;
}

// ---------------------------------------------------------------------------
// Composed translations (direct modular forms of the composition theorems)

static Formula g_circ_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return quest(Formula::bang(a));
    case Conn::Tensor:
      return Formula::tensor(Formula::bang(g_circ_core(a.left())),
                             Formula::bang(g_circ_core(a.right())));
    case Conn::With:
      return Formula::with(g_circ_core(a.left()), g_circ_core(a.right()));
    case Conn::Plus:
      return quest(Formula::plus(Formula::bang(g_circ_core(a.left())),
                                 Formula::bang(g_circ_core(a.right()))));
    case Conn::Lolli:
      return Formula::lolli(Formula::bang(g_circ_core(a.left())), g_circ_core(a.right()));
    case Conn::Bang:
      return Formula::bang(g_circ_core(a.right()));
    case Conn::Forall:
      return Formula::forall(a.var(), g_circ_core(a.body()));
    case Conn::Exists:
      return quest(Formula::exists(a.var(), Formula::bang(g_circ_core(a.body()))));
  }
  throw std::logic_error("bad tag");
}

static Formula g_star_direct(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return Formula::bang(quest(Formula::bang(a)));
    case Conn::Tensor:
      return Formula::tensor(g_star_direct(a.left()), g_star_direct(a.right()));
    case Conn::With:
      return Formula::bang(Formula::with(g_star_direct(a.left()), g_star_direct(a.right())));
    case Conn::Plus:
      return Formula::bang(
          quest(Formula::plus(g_star_direct(a.left()), g_star_direct(a.right()))));
    case Conn::Lolli:
      return Formula::bang(Formula::lolli(g_star_direct(a.left()), g_star_direct(a.right())));
    case Conn::Bang:
      return Formula::bang(g_star_direct(a.right()));
    case Conn::Forall:
      return Formula::bang(Formula::forall(a.var(), g_star_direct(a.body())));
    case Conn::Exists:
      return Formula::bang(quest(Formula::exists(a.var(), g_star_direct(a.body()))));
  }
  throw std::logic_error("bad tag");
}

static Formula ku_circ_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return a;
    case Conn::Tensor:
      return Formula::tensor(Formula::bang(ku_circ_core(a.left())),
                             Formula::bang(ku_circ_core(a.right())));
    case Conn::With:
      return Formula::with(Formula::bang(ku_circ_core(a.left())),
                           Formula::bang(ku_circ_core(a.right())));
    case Conn::Plus:
      return Formula::plus(Formula::bang(ku_circ_core(a.left())),
                           Formula::bang(ku_circ_core(a.right())));
    case Conn::Lolli:
      return Formula::lolli(Formula::bang(ku_circ_core(a.left())), ku_circ_core(a.right()));
    case Conn::Bang:
      return Formula::bang(ku_circ_core(a.right()));
    case Conn::Forall:
      return Formula::forall(a.var(), quest(Formula::bang(ku_circ_core(a.body()))));
    case Conn::Exists:
      return Formula::exists(a.var(), Formula::bang(ku_circ_core(a.body())));
  }
  throw std::logic_error("bad tag");
}

static Formula ku_star_core(const Formula& a) {
  switch (a.tag()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return Formula::bang(a);
    case Conn::Tensor:
      return Formula::tensor(ku_star_core(a.left()), ku_star_core(a.right()));
    case Conn::With:
      return Formula::bang(Formula::with(ku_star_core(a.left()), ku_star_core(a.right())));
    case Conn::Plus:
      return Formula::plus(ku_star_core(a.left()), ku_star_core(a.right()));
    case Conn::Lolli:
      return Formula::bang(Formula::lolli(ku_star_core(a.left()), ku_star_core(a.right())));
    case Conn::Bang:
      return Formula::bang(ku_star_core(a.right()));
    case Conn::Forall:
      return Formula::bang(Formula::forall(a.var(), quest(ku_star_core(a.body()))));
    case Conn::Exists:
      return Formula::exists(a.var(), ku_star_core(a.body()));
  }
  throw std::logic_error("bad tag");
}

Formula composed(const Formula& a, ComposedId which) {
  switch (which) {
    case ComposedId::GCirc:
      return Formula::bang(g_circ_core(a));
    case ComposedId::GStar:
      return g_star_direct(a);
    case ComposedId::KuCirc:
      return Formula::bang(quest(Formula::bang(ku_circ_core(a))));
    case ComposedId::KuStar:
      return Formula::bang(quest(ku_star_core(a)));
  }
  throw std::logic_error("bad composed id");
}

// ---------------------------------------------------------------------------
// Dispatch

Formula translate_ill(const Formula& a, TranslationId id) {
  switch (id) {
    case TranslationId::Dagger:
    case TranslationId::DDagger:
    case TranslationId::Forget:
      throw std::invalid_argument(std::string(translation_name(id)) +
                                  " is not a translation of the linear language into itself");
    case TranslationId::KolmOuter:
      return kolmogorov(a, Presentation::Outer);
    case TranslationId::KolmInner:
      return kolmogorov(a, Presentation::Inner);
    case TranslationId::GG:
      return godel_gentzen(a);
    case TranslationId::Kuroda:
      return kuroda(a);
    case TranslationId::LinGG:
      return linear_godel_gentzen(a);
    case TranslationId::LinKuroda:
      return linear_kuroda(a);
    case TranslationId::GirardFullOuter:
      return girard_full(a, Presentation::Outer);
    case TranslationId::GirardFullInner:
      return girard_full(a, Presentation::Inner);
    case TranslationId::Star:
      return girard_star(a);
    case TranslationId::Circ:
      return girard_circ(a, true);
    case TranslationId::GCirc:
      return composed(a, ComposedId::GCirc);
    case TranslationId::GStar:
      return composed(a, ComposedId::GStar);
    case TranslationId::KuCirc:
      return composed(a, ComposedId::KuCirc);
    case TranslationId::KuStar:
      return composed(a, ComposedId::KuStar);
  }
  throw std::logic_error("bad translation id");
}

Formula compose_literal(const Formula& a, TranslationId first, TranslationId second) {
  return translate_ill(translate_ill(a, first), second);
}

}  // namespace illtrans
