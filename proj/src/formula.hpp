#pragma once

// Immutable ASTs for the three formula languages handled by the toolkit:
// the linear target language (Formula), the intuitionistic source language
// (SourceFormulaIL) and the classical-linear source language
// (SourceFormulaCLL).  Negation ~A and the why-not ?A are not constructors
// of Formula: ~A abbreviates A -o 0 and ?A abbreviates ~!~A.  Both are
// recognized again by the printer.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace illtrans {

// ---------------------------------------------------------------------------
// Terms

class Term {
public:
  enum class Kind : uint8_t { Var, Const, App };

  static Term var(std::string name);
  static Term constant(std::string name);
  static Term app(std::string fn, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

private:
  Kind kind_ = Kind::Var;
  std::string name_;
  std::vector<Term> args_;
};

Term substitute(const Term& t, const std::string& x, const Term& repl);
void collect_vars(const Term& t, std::set<std::string>& out);

// ---------------------------------------------------------------------------
// Linear-language formulas

enum class Conn : uint8_t {
  Atom,
  Top,
  Zero,
  One,
  Tensor,
  With,
  Plus,
  Lolli,
  Bang,
  Forall,
  Exists,
};

class Formula {
public:
  Formula() = default;  // empty handle; only valid after assignment

  static Formula atom(std::string name, std::vector<Term> args = {});
  static Formula top();
  static Formula zero();
  static Formula one();
  static Formula tensor(Formula l, Formula r);
  static Formula with(Formula l, Formula r);
  static Formula plus(Formula l, Formula r);
  static Formula lolli(Formula l, Formula r);
  static Formula bang(Formula f);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  bool valid() const { return node_ != nullptr; }
  Conn tag() const;
  const std::string& atom_name() const;
  const std::vector<Term>& atom_args() const;
  const Formula& left() const;
  const Formula& right() const;   // also the Bang operand
  const std::string& var() const;
  const Formula& body() const;

  // Exact structural equality (bound-variable names matter).
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Abbreviations (definitional; these build plain Lolli/Bang nodes).
Formula neg(const Formula& a);                       // A -o 0
Formula quest(const Formula& a);                     // ~!~A
Formula lequiv(const Formula& a, const Formula& b);  // (A -o B) & (B -o A)

// Pattern recognizers for the printer and the rewrite engine.
bool match_neg(const Formula& f, Formula* inner);    // f == A -o 0
bool match_quest(const Formula& f, Formula* inner);  // f == ~!~A

bool alpha_eq(const Formula& a, const Formula& b);
Formula substitute(const Formula& a, const std::string& x, const Term& t);

std::set<std::string> free_vars(const Formula& a);
size_t formula_size(const Formula& a);
// Atom names with multiplicity, in left-to-right order.
std::vector<std::string> atom_names(const Formula& a);

// Canonical key: alpha-invariant serialization (de Bruijn binders), usable
// as a hash-map key.
std::string formula_key(const Formula& a);

// ---------------------------------------------------------------------------
// Source language of intuitionistic logic

enum class ILConn : uint8_t { Atom, Bot, Top, And, Or, Imp, Forall, Exists };

class SourceFormulaIL {
public:
  SourceFormulaIL() = default;

  static SourceFormulaIL atom(std::string name, std::vector<Term> args = {});
  static SourceFormulaIL bot();
  static SourceFormulaIL top();
  static SourceFormulaIL and_(SourceFormulaIL l, SourceFormulaIL r);
  static SourceFormulaIL or_(SourceFormulaIL l, SourceFormulaIL r);
  static SourceFormulaIL imp(SourceFormulaIL l, SourceFormulaIL r);
  static SourceFormulaIL forall(std::string var, SourceFormulaIL body);
  static SourceFormulaIL exists(std::string var, SourceFormulaIL body);

  bool valid() const { return node_ != nullptr; }
  ILConn tag() const;
  const std::string& atom_name() const;
  const std::vector<Term>& atom_args() const;
  const SourceFormulaIL& left() const;
  const SourceFormulaIL& right() const;
  const std::string& var() const;
  const SourceFormulaIL& body() const;

  bool operator==(const SourceFormulaIL& o) const;
  bool operator!=(const SourceFormulaIL& o) const { return !(*this == o); }

private:
  struct Node;
  explicit SourceFormulaIL(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_eq(const SourceFormulaIL& a, const SourceFormulaIL& b);

// ---------------------------------------------------------------------------
// Source language of classical linear logic (par and ? are primitive here)

enum class CLLConn : uint8_t {
  Atom,
  Top,
  Zero,
  One,
  Bot,
  Tensor,
  With,
  Plus,
  Par,
  Bang,
  Quest,
  Forall,
  Exists,
};

class SourceFormulaCLL {
public:
  SourceFormulaCLL() = default;

  static SourceFormulaCLL atom(std::string name, std::vector<Term> args = {});
  static SourceFormulaCLL top();
  static SourceFormulaCLL zero();
  static SourceFormulaCLL one();
  static SourceFormulaCLL bot();
  static SourceFormulaCLL tensor(SourceFormulaCLL l, SourceFormulaCLL r);
  static SourceFormulaCLL with(SourceFormulaCLL l, SourceFormulaCLL r);
  static SourceFormulaCLL plus(SourceFormulaCLL l, SourceFormulaCLL r);
  static SourceFormulaCLL par(SourceFormulaCLL l, SourceFormulaCLL r);
  static SourceFormulaCLL bang(SourceFormulaCLL f);
  static SourceFormulaCLL quest(SourceFormulaCLL f);
  static SourceFormulaCLL forall(std::string var, SourceFormulaCLL body);
  static SourceFormulaCLL exists(std::string var, SourceFormulaCLL body);

  bool valid() const { return node_ != nullptr; }
  CLLConn tag() const;
  const std::string& atom_name() const;
  const std::vector<Term>& atom_args() const;
  const SourceFormulaCLL& left() const;
  const SourceFormulaCLL& right() const;
  const std::string& var() const;
  const SourceFormulaCLL& body() const;

  bool operator==(const SourceFormulaCLL& o) const;
  bool operator!=(const SourceFormulaCLL& o) const { return !(*this == o); }

private:
  struct Node;
  explicit SourceFormulaCLL(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_eq(const SourceFormulaCLL& a, const SourceFormulaCLL& b);

}  // namespace illtrans
