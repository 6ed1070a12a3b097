#include "syntax.hpp"

#include <cctype>

namespace illtrans {

namespace {

enum class Tok {
  Ident,
  KwForall,
  KwExists,
  KwTop,
  KwBot,
  KwPar,
  Zero,
  One,
  Bang,
  Quest,
  Tilde,
  Star,
  Amp,
  Plus,
  Lolli,     // -o
  And,       // "/\"
  Or,        // "\/"
  Imp,       // ->
  LParen,
  RParen,
  Comma,
  Dot,
  Turnstile,  // |-
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwForall: return "'forall'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwTop: return "'top'";
    case Tok::KwBot: return "'bot'";
    case Tok::KwPar: return "'par'";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::Bang: return "'!'";
    case Tok::Quest: return "'?'";
    case Tok::Tilde: return "'~'";
    case Tok::Star: return "'*'";
    case Tok::Amp: return "'&'";
    case Tok::Plus: return "'+'";
    case Tok::Lolli: return "'-o'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Imp: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i + 1;
      while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      std::string word = s.substr(i, j - i);
      i = j;
      Tok k = Tok::Ident;
      if (word == "forall") k = Tok::KwForall;
      else if (word == "exists") k = Tok::KwExists;
      else if (word == "top") k = Tok::KwTop;
      else if (word == "bot") k = Tok::KwBot;
      else if (word == "par") k = Tok::KwPar;
      out.push_back({k, std::move(word), start});
      continue;
    }
    switch (c) {
      case '0': out.push_back({Tok::Zero, "0", start}); ++i; break;
      case '1': out.push_back({Tok::One, "1", start}); ++i; break;
      case '!': out.push_back({Tok::Bang, "!", start}); ++i; break;
      case '?': out.push_back({Tok::Quest, "?", start}); ++i; break;
      case '~': out.push_back({Tok::Tilde, "~", start}); ++i; break;
      case '*': out.push_back({Tok::Star, "*", start}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; break;
      case '+': out.push_back({Tok::Plus, "+", start}); ++i; break;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; break;
      case '-':
        if (i + 1 < n && s[i + 1] == 'o') { out.push_back({Tok::Lolli, "-o", start}); i += 2; }
        else if (i + 1 < n && s[i + 1] == '>') { out.push_back({Tok::Imp, "->", start}); i += 2; }
        else throw ParseError("stray '-'", start);
        break;
      case '/':
        if (i + 1 < n && s[i + 1] == '\\') { out.push_back({Tok::And, "/\\", start}); i += 2; }
        else throw ParseError("stray '/'", start);
        break;
      case '\\':
        if (i + 1 < n && s[i + 1] == '/') { out.push_back({Tok::Or, "\\/", start}); i += 2; }
        else throw ParseError("stray '\\'", start);
        break;
      case '|':
        if (i + 1 < n && s[i + 1] == '-') { out.push_back({Tok::Turnstile, "|-", start}); i += 2; }
        else throw ParseError("stray '|'", start);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", n});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, Lang lang) : toks_(lex(text)), lang_(lang) {}

  Formula formula_ill() {
    Formula f = ill_formula();
    expect(Tok::End);
    return f;
  }

  SourceFormulaIL formula_il() {
    SourceFormulaIL f = il_formula();
    expect(Tok::End);
    return f;
  }

  SourceFormulaCLL formula_cll() {
    SourceFormulaCLL f = cll_formula();
    expect(Tok::End);
    return f;
  }

  ParsedSequent sequent_ill() {
    ParsedSequent s;
    if (peek().kind != Tok::Turnstile) {
      s.hyps.push_back(ill_formula());
      while (peek().kind == Tok::Comma) {
        advance();
        s.hyps.push_back(ill_formula());
      }
    }
    expect(Tok::Turnstile);
    s.goal = ill_formula();
    expect(Tok::End);
    return s;
  }

private:
  std::vector<Token> toks_;
  size_t idx_ = 0;
  Lang lang_;
  std::vector<std::string> binders_;

  const Token& peek() const { return toks_[idx_]; }
  const Token& advance() { return toks_[idx_++]; }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("expected " + what + ", got " + tok_name(peek().kind), peek().pos);
  }

  [[noreturn]] void wrong_language(const char* conn) {
    const char* ln = lang_ == Lang::IL ? "IL" : lang_ == Lang::CLL ? "CLL" : "ILL";
    throw ParseError(std::string(conn) + " is not part of the " + ln + " language", peek().pos);
  }

  void expect(Tok k) {
    // Prefer a wrong-language diagnostic over a generic one when the
    // offending token is a connective of another language.
    if (peek().kind != k) check_language_token();
    if (peek().kind != k) fail(tok_name(k));
    advance();
  }

  // Reject tokens belonging to one of the other two languages with a
  // dedicated message, anywhere a connective or constant may start.
  void check_language_token() {
    Tok k = peek().kind;
    if (lang_ != Lang::IL && (k == Tok::And || k == Tok::Or || k == Tok::Imp))
      wrong_language(tok_name(k));
    if (lang_ == Lang::IL &&
        (k == Tok::Star || k == Tok::Amp || k == Tok::Plus || k == Tok::Lolli ||
         k == Tok::Bang || k == Tok::Quest || k == Tok::Tilde || k == Tok::Zero ||
         k == Tok::One || k == Tok::KwPar))
      wrong_language(tok_name(k));
    if (lang_ == Lang::CLL && (k == Tok::Lolli || k == Tok::Tilde)) wrong_language(tok_name(k));
    if (lang_ == Lang::ILL && (k == Tok::KwPar || k == Tok::KwBot)) wrong_language(tok_name(k));
  }

  bool bound(const std::string& name) const {
    for (const std::string& b : binders_)
      if (b == name) return true;
    return false;
  }

  Term term() {
    if (peek().kind != Tok::Ident) fail("term");
    Token t = advance();
    if (peek().kind == Tok::LParen) {
      advance();
      std::vector<Term> args;
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Tok::RParen);
      return Term::app(t.text, std::move(args));
    }
    return bound(t.text) ? Term::var(t.text) : Term::constant(t.text);
  }

  std::pair<std::string, std::vector<Term>> atom_parts() {
    Token t = advance();  // Ident
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) {
      advance();
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Tok::RParen);
    }
    return {t.text, std::move(args)};
  }

  // ----- ILL -----

  Formula ill_formula() {
    check_language_token();
    if (peek().kind == Tok::KwForall || peek().kind == Tok::KwExists) {
      bool fa = advance().kind == Tok::KwForall;
      if (peek().kind != Tok::Ident) fail("bound variable");
      std::string v = advance().text;
      expect(Tok::Dot);
      binders_.push_back(v);
      Formula body = ill_formula();
      binders_.pop_back();
      return fa ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    Formula l = ill_plus();
    if (peek().kind == Tok::Lolli) {
      advance();
      Formula r = ill_formula();
      return Formula::lolli(l, r);
    }
    return l;
  }

  Formula ill_plus() {
    Formula f = ill_with();
    while (peek().kind == Tok::Plus) {
      advance();
      f = Formula::plus(f, ill_with());
    }
    return f;
  }

  Formula ill_with() {
    Formula f = ill_tensor();
    while (peek().kind == Tok::Amp) {
      advance();
      f = Formula::with(f, ill_tensor());
    }
    return f;
  }

  Formula ill_tensor() {
    Formula f = ill_prefix();
    while (peek().kind == Tok::Star) {
      advance();
      f = Formula::tensor(f, ill_prefix());
    }
    return f;
  }

  Formula ill_prefix() {
    check_language_token();
    switch (peek().kind) {
      case Tok::Bang:
        advance();
        return Formula::bang(ill_prefix());
      case Tok::Quest:
        advance();
        return quest(ill_prefix());
      case Tok::Tilde:
        advance();
        return neg(ill_prefix());
      default:
        return ill_primary();
    }
  }

  Formula ill_primary() {
    check_language_token();
    switch (peek().kind) {
      case Tok::LParen: {
        advance();
        Formula f = ill_formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::KwTop:
        advance();
        return Formula::top();
      case Tok::Zero:
        advance();
        return Formula::zero();
      case Tok::One:
        advance();
        return Formula::one();
      case Tok::Ident: {
        auto [name, args] = atom_parts();
        return Formula::atom(name, std::move(args));
      }
      default:
        fail("formula");
    }
  }

  // ----- IL -----

  SourceFormulaIL il_formula() {
    check_language_token();
    if (peek().kind == Tok::KwForall || peek().kind == Tok::KwExists) {
      bool fa = advance().kind == Tok::KwForall;
      if (peek().kind != Tok::Ident) fail("bound variable");
      std::string v = advance().text;
      expect(Tok::Dot);
      binders_.push_back(v);
      SourceFormulaIL body = il_formula();
      binders_.pop_back();
      return fa ? SourceFormulaIL::forall(v, body) : SourceFormulaIL::exists(v, body);
    }
    SourceFormulaIL l = il_or();
    if (peek().kind == Tok::Imp) {
      advance();
      return SourceFormulaIL::imp(l, il_formula());
    }
    return l;
  }

  SourceFormulaIL il_or() {
    SourceFormulaIL f = il_and();
    while (peek().kind == Tok::Or) {
      advance();
      f = SourceFormulaIL::or_(f, il_and());
    }
    return f;
  }

  SourceFormulaIL il_and() {
    SourceFormulaIL f = il_primary();
    while (peek().kind == Tok::And) {
      advance();
      f = SourceFormulaIL::and_(f, il_primary());
    }
    return f;
  }

  SourceFormulaIL il_primary() {
    check_language_token();
    switch (peek().kind) {
      case Tok::LParen: {
        advance();
        SourceFormulaIL f = il_formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::KwTop:
        advance();
        return SourceFormulaIL::top();
      case Tok::KwBot:
        advance();
        return SourceFormulaIL::bot();
      case Tok::Ident: {
        auto [name, args] = atom_parts();
        return SourceFormulaIL::atom(name, std::move(args));
      }
      default:
        fail("formula");
    }
  }

  // ----- CLL -----

  SourceFormulaCLL cll_formula() {
    check_language_token();
    if (peek().kind == Tok::KwForall || peek().kind == Tok::KwExists) {
      bool fa = advance().kind == Tok::KwForall;
      if (peek().kind != Tok::Ident) fail("bound variable");
      std::string v = advance().text;
      expect(Tok::Dot);
      binders_.push_back(v);
      SourceFormulaCLL body = cll_formula();
      binders_.pop_back();
      return fa ? SourceFormulaCLL::forall(v, body) : SourceFormulaCLL::exists(v, body);
    }
    return cll_par();
  }

  SourceFormulaCLL cll_par() {
    SourceFormulaCLL f = cll_plus();
    while (peek().kind == Tok::KwPar) {
      advance();
      f = SourceFormulaCLL::par(f, cll_plus());
    }
    return f;
  }

  SourceFormulaCLL cll_plus() {
    SourceFormulaCLL f = cll_with();
    while (peek().kind == Tok::Plus) {
      advance();
      f = SourceFormulaCLL::plus(f, cll_with());
    }
    return f;
  }

  SourceFormulaCLL cll_with() {
    SourceFormulaCLL f = cll_tensor();
    while (peek().kind == Tok::Amp) {
      advance();
      f = SourceFormulaCLL::with(f, cll_tensor());
    }
    return f;
  }

  SourceFormulaCLL cll_tensor() {
    SourceFormulaCLL f = cll_prefix();
    while (peek().kind == Tok::Star) {
      advance();
      f = SourceFormulaCLL::tensor(f, cll_prefix());
    }
    return f;
  }

  SourceFormulaCLL cll_prefix() {
    check_language_token();
    switch (peek().kind) {
      case Tok::Bang:
        advance();
        return SourceFormulaCLL::bang(cll_prefix());
      case Tok::Quest:
        advance();
        return SourceFormulaCLL::quest(cll_prefix());
      default:
        return cll_primary();
    }
  }

  SourceFormulaCLL cll_primary() {
    check_language_token();
    switch (peek().kind) {
      case Tok::LParen: {
        advance();
        SourceFormulaCLL f = cll_formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::KwTop:
        advance();
        return SourceFormulaCLL::top();
      case Tok::KwBot:
        advance();
        return SourceFormulaCLL::bot();
      case Tok::Zero:
        advance();
        return SourceFormulaCLL::zero();
      case Tok::One:
        advance();
        return SourceFormulaCLL::one();
      case Tok::Ident: {
        auto [name, args] = atom_parts();
        return SourceFormulaCLL::atom(name, std::move(args));
      }
      default:
        fail("formula");
    }
  }
};

}  // namespace

Formula parse_ill(const std::string& text) { return Parser(text, Lang::ILL).formula_ill(); }
SourceFormulaIL parse_il(const std::string& text) { return Parser(text, Lang::IL).formula_il(); }
SourceFormulaCLL parse_cll(const std::string& text) { return Parser(text, Lang::CLL).formula_cll(); }
ParsedSequent parse_sequent(const std::string& text) { return Parser(text, Lang::ILL).sequent_ill(); }

// ---------------------------------------------------------------------------
// Printers

std::string print(const Term& t) {
  std::string out = t.name();
  if (t.kind() == Term::Kind::App) {
    out += "(";
    for (size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      out += print(t.args()[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

std::string atom_text(const std::string& name, const std::vector<Term>& args) {
  std::string out = name;
  if (!args.empty()) {
    out += "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      out += print(args[i]);
    }
    out += ")";
  }
  return out;
}

// Precedence levels, loosest to tightest:
//   0 lolli / quantifier, 1 plus, 2 with, 3 tensor, 4 prefix, 5 atomic
void print_ill(const Formula& f, int ctx, std::string& out) {
  Formula inner;
  if (match_quest(f, &inner)) {
    out += "?";
    print_ill(inner, 4, out);
    return;
  }
  if (match_neg(f, &inner)) {
    out += "~";
    print_ill(inner, 4, out);
    return;
  }
  auto wrap = [&](int level, auto&& body) {
    bool paren = level < ctx;
    if (paren) out += "(";
    body();
    if (paren) out += ")";
  };
  switch (f.tag()) {
    case Conn::Atom:
      out += atom_text(f.atom_name(), f.atom_args());
      return;
    case Conn::Top: out += "top"; return;
    case Conn::Zero: out += "0"; return;
    case Conn::One: out += "1"; return;
    case Conn::Lolli:
      wrap(0, [&] {
        print_ill(f.left(), 1, out);
        out += " -o ";
        print_ill(f.right(), 0, out);
      });
      return;
    case Conn::Plus:
      wrap(1, [&] {
        print_ill(f.left(), 1, out);
        out += " + ";
        print_ill(f.right(), 2, out);
      });
      return;
    case Conn::With:
      wrap(2, [&] {
        print_ill(f.left(), 2, out);
        out += " & ";
        print_ill(f.right(), 3, out);
      });
      return;
    case Conn::Tensor:
      wrap(3, [&] {
        print_ill(f.left(), 3, out);
        out += " * ";
        print_ill(f.right(), 4, out);
      });
      return;
    case Conn::Bang:
      out += "!";
      print_ill(f.right(), 4, out);
      return;
    case Conn::Forall:
    case Conn::Exists:
      wrap(0, [&] {
        out += f.tag() == Conn::Forall ? "forall " : "exists ";
        out += f.var();
        out += ". ";
        print_ill(f.body(), 0, out);
      });
      return;
  }
}

// IL levels: 0 imp / quantifier, 1 or, 2 and, 3 atomic
void print_il(const SourceFormulaIL& f, int ctx, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    bool paren = level < ctx;
    if (paren) out += "(";
    body();
    if (paren) out += ")";
  };
  switch (f.tag()) {
    case ILConn::Atom:
      out += atom_text(f.atom_name(), f.atom_args());
      return;
    case ILConn::Top: out += "top"; return;
    case ILConn::Bot: out += "bot"; return;
    case ILConn::Imp:
      wrap(0, [&] {
        print_il(f.left(), 1, out);
        out += " -> ";
        print_il(f.right(), 0, out);
      });
      return;
    case ILConn::Or:
      wrap(1, [&] {
        print_il(f.left(), 1, out);
        out += " \\/ ";
        print_il(f.right(), 2, out);
      });
      return;
    case ILConn::And:
      wrap(2, [&] {
        print_il(f.left(), 2, out);
        out += " /\\ ";
        print_il(f.right(), 3, out);
      });
      return;
    case ILConn::Forall:
    case ILConn::Exists:
      wrap(0, [&] {
        out += f.tag() == ILConn::Forall ? "forall " : "exists ";
        out += f.var();
        out += ". ";
        print_il(f.body(), 0, out);
      });
      return;
  }
}

// CLL levels: 0 par / quantifier, 1 plus, 2 with, 3 tensor, 4 prefix, 5 atomic
void print_cll(const SourceFormulaCLL& f, int ctx, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    bool paren = level < ctx;
    if (paren) out += "(";
    body();
    if (paren) out += ")";
  };
  switch (f.tag()) {
    case CLLConn::Atom:
      out += atom_text(f.atom_name(), f.atom_args());
      return;
    case CLLConn::Top: out += "top"; return;
    case CLLConn::Bot: out += "bot"; return;
    case CLLConn::Zero: out += "0"; return;
    case CLLConn::One: out += "1"; return;
    case CLLConn::Par:
      wrap(0, [&] {
        print_cll(f.left(), 1, out);
        out += " par ";
        print_cll(f.right(), 1, out);
      });
      return;
    case CLLConn::Plus:
      wrap(1, [&] {
        print_cll(f.left(), 1, out);
        out += " + ";
        print_cll(f.right(), 2, out);
      });
      return;
    case CLLConn::With:
      wrap(2, [&] {
        print_cll(f.left(), 2, out);
        out += " & ";
        print_cll(f.right(), 3, out);
      });
      return;
    case CLLConn::Tensor:
      wrap(3, [&] {
        print_cll(f.left(), 3, out);
        out += " * ";
        print_cll(f.right(), 4, out);
      });
      return;
    case CLLConn::Bang:
      out += "!";
      print_cll(f.right(), 4, out);
      return;
    case CLLConn::Quest:
      out += "?";
      print_cll(f.right(), 4, out);
      return;
    case CLLConn::Forall:
    case CLLConn::Exists:
      wrap(0, [&] {
        out += f.tag() == CLLConn::Forall ? "forall " : "exists ";
        out += f.var();
        out += ". ";
        print_cll(f.body(), 0, out);
      });
      return;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_ill(f, 0, out);
  return out;
}

std::string print(const SourceFormulaIL& f) {
  std::string out;
  print_il(f, 0, out);
  return out;
}

std::string print(const SourceFormulaCLL& f) {
  std::string out;
  print_cll(f, 0, out);
  return out;
}

}  // namespace illtrans
