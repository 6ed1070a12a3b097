#include "corpus.hpp"

#include <map>
#include <random>
#include <string>

namespace illtrans {

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  // engine output used directly: std:: distributions are not portable
  // across library implementations, and the corpus must be seed-stable
  size_t below(size_t n) { return (size_t)(eng() % n); }
};

std::string atom_name(int i) {
  static const char* names[] = {"P", "Q", "R", "S", "T", "U", "V", "W"};
  if (i < 8) return names[i];
  return "P" + std::to_string(i);
}

struct Gen {
  Rng rng;
  const CorpusParams& p;
  std::vector<std::string> bound;

  Gen(const CorpusParams& p) : rng(p.seed), p(p) {}

  Term atom_arg() {
    if (!bound.empty() && rng.below(4) < 3) return Term::var(bound[rng.below(bound.size())]);
    return Term::constant("c");
  }

  std::pair<std::string, std::vector<Term>> atom_parts() {
    int i = (int)rng.below((size_t)p.atoms);
    std::vector<Term> args;
    if (p.quantifiers && i % 2 == 1) args.push_back(atom_arg());
    return {atom_name(i), std::move(args)};
  }

  std::string push_binder() {
    std::string v = "x" + std::to_string(bound.size() + 1);
    bound.push_back(v);
    return v;
  }

  Formula ill(int depth) {
    bool can_quant = p.quantifiers && (int)bound.size() < p.max_bound_vars;
    size_t choices = depth == 0 ? 1 : (can_quant ? 9 : 8);
    switch (rng.below(choices)) {
      default: {
        if (p.constants && rng.below(5) == 0) {
          switch (rng.below(3)) {
            case 0: return Formula::top();
            case 1: return Formula::zero();
            default: return Formula::one();
          }
        }
        auto [name, args] = atom_parts();
        return Formula::atom(name, std::move(args));
      }
      case 1: return Formula::bang(ill(depth - 1));
      case 2: return Formula::tensor(ill(depth - 1), ill(depth - 1));
      case 3: return Formula::with(ill(depth - 1), ill(depth - 1));
      case 4: return Formula::plus(ill(depth - 1), ill(depth - 1));
      case 5:
      case 6: return Formula::lolli(ill(depth - 1), ill(depth - 1));
      case 7: return neg(ill(depth - 1));
      case 8: {
        std::string v = push_binder();
        Formula body = ill(depth - 1);
        bound.pop_back();
        return rng.below(2) ? Formula::forall(v, body) : Formula::exists(v, body);
      }
    }
  }

  SourceFormulaIL il(int depth) {
    bool can_quant = p.quantifiers && (int)bound.size() < p.max_bound_vars;
    size_t choices = depth == 0 ? 1 : (can_quant ? 6 : 5);
    switch (rng.below(choices)) {
      default: {
        if (p.constants && rng.below(5) == 0)
          return rng.below(2) ? SourceFormulaIL::top() : SourceFormulaIL::bot();
        auto [name, args] = atom_parts();
        return SourceFormulaIL::atom(name, std::move(args));
      }
      case 1: return SourceFormulaIL::and_(il(depth - 1), il(depth - 1));
      case 2: return SourceFormulaIL::or_(il(depth - 1), il(depth - 1));
      case 3:
      case 4: return SourceFormulaIL::imp(il(depth - 1), il(depth - 1));
      case 5: {
        std::string v = push_binder();
        SourceFormulaIL body = il(depth - 1);
        bound.pop_back();
        return rng.below(2) ? SourceFormulaIL::forall(v, body)
                            : SourceFormulaIL::exists(v, body);
      }
    }
  }

  SourceFormulaCLL cll(int depth) {
    bool can_quant = p.quantifiers && (int)bound.size() < p.max_bound_vars;
    size_t choices = depth == 0 ? 1 : (can_quant ? 9 : 8);
    switch (rng.below(choices)) {
      default: {
        if (p.constants && rng.below(5) == 0) {
          switch (rng.below(4)) {
            case 0: return SourceFormulaCLL::top();
            case 1: return SourceFormulaCLL::zero();
            case 2: return SourceFormulaCLL::one();
            default: return SourceFormulaCLL::bot();
          }
        }
        auto [name, args] = atom_parts();
        return SourceFormulaCLL::atom(name, std::move(args));
      }
      case 1: return rng.below(2) ? SourceFormulaCLL::bang(cll(depth - 1))
                                  : SourceFormulaCLL::quest(cll(depth - 1));
      case 2: return SourceFormulaCLL::tensor(cll(depth - 1), cll(depth - 1));
      case 3: return SourceFormulaCLL::with(cll(depth - 1), cll(depth - 1));
      case 4: return SourceFormulaCLL::plus(cll(depth - 1), cll(depth - 1));
      case 5:
      case 6: return SourceFormulaCLL::par(cll(depth - 1), cll(depth - 1));
      case 7: return SourceFormulaCLL::tensor(cll(depth - 1), cll(depth - 1));
      case 8: {
        std::string v = push_binder();
        SourceFormulaCLL body = cll(depth - 1);
        bound.pop_back();
        return rng.below(2) ? SourceFormulaCLL::forall(v, body)
                            : SourceFormulaCLL::exists(v, body);
      }
    }
  }
};

}  // namespace

std::vector<Formula> random_ill(const CorpusParams& p) {
  Gen g(p);
  std::vector<Formula> out;
  out.reserve(p.count);
  for (size_t i = 0; i < p.count; ++i) out.push_back(g.ill(p.max_depth));
  return out;
}

std::vector<SourceFormulaIL> random_il(const CorpusParams& p) {
  Gen g(p);
  std::vector<SourceFormulaIL> out;
  out.reserve(p.count);
  for (size_t i = 0; i < p.count; ++i) out.push_back(g.il(p.max_depth));
  return out;
}

std::vector<SourceFormulaCLL> random_cll(const CorpusParams& p) {
  Gen g(p);
  std::vector<SourceFormulaCLL> out;
  out.reserve(p.count);
  for (size_t i = 0; i < p.count; ++i) out.push_back(g.cll(p.max_depth));
  return out;
}

std::vector<Formula> enumerate_ill(int depth, int atoms) {
  std::vector<Formula> all;
  std::map<std::string, bool> seen;
  auto add = [&](const Formula& f) {
    std::string k = formula_key(f);
    if (seen.emplace(k, true).second) all.push_back(f);
  };
  for (int i = 0; i < atoms; ++i) add(Formula::atom(atom_name(i)));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Formula> snapshot(all.begin(), all.end());
    for (const Formula& f : snapshot) add(Formula::bang(f));
    for (const Formula& f : snapshot)
      for (const Formula& g : snapshot) {
        add(Formula::tensor(f, g));
        add(Formula::with(f, g));
        add(Formula::plus(f, g));
        add(Formula::lolli(f, g));
      }
  }
  return all;
}

}  // namespace illtrans
