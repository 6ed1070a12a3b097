#include "models.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "syntax.hpp"

namespace illtrans {

// ---------------------------------------------------------------------------
// Law checking

bool algebra_valid(const Algebra& a, const Theory& th, std::string* why) {
  auto bad = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  int n = a.n, top = a.top();
  if (n < 1) return bad("empty carrier");

  for (int i = 0; i < n; ++i) {
    if (!a.leq(i, i)) return bad("leq not reflexive");
    if (!a.leq(0, i) || !a.leq(i, top)) return bad("0/top not extremal");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && a.leq(i, j) && a.leq(j, i)) return bad("leq not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (a.leq(i, j) && a.leq(j, k) && !a.leq(i, k)) return bad("leq not transitive");
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = a.meet(i, j), jn = a.join(i, j);
      if (!a.leq(m, i) || !a.leq(m, j)) return bad("meet not a lower bound");
      if (!a.leq(i, jn) || !a.leq(j, jn)) return bad("join not an upper bound");
      for (int c = 0; c < n; ++c) {
        if (a.leq(c, i) && a.leq(c, j) && !a.leq(c, m)) return bad("meet not greatest");
        if (a.leq(i, c) && a.leq(j, c) && !a.leq(jn, c)) return bad("join not least");
      }
    }

  for (int i = 0; i < n; ++i) {
    if (a.ten(i, top) != i || a.ten(top, i) != i) return bad("top not the unit");
    for (int j = 0; j < n; ++j) {
      if (a.ten(i, j) != a.ten(j, i)) return bad("tensor not commutative");
      for (int k = 0; k < n; ++k) {
        if (a.ten(a.ten(i, j), k) != a.ten(i, a.ten(j, k)))
          return bad("tensor not associative");
        if (a.leq(i, j) && !a.leq(a.ten(i, k), a.ten(j, k)))
          return bad("tensor not monotone");
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int r = a.imp(i, j);
      for (int c = 0; c < n; ++c)
        if (a.leq(a.ten(i, c), j) != a.leq(c, r)) return bad("imp not the residual");
    }

  if (a.bang(0) != 0 || a.bang(top) != top) return bad("bang violates the extremes");
  for (int i = 0; i < n; ++i) {
    if (!a.leq(a.bang(i), i)) return bad("bang not deflationary");
    if (a.bang(a.bang(i)) != a.bang(i)) return bad("bang not idempotent");
    for (int j = 0; j < n; ++j) {
      if (a.leq(i, j) && !a.leq(a.bang(i), a.bang(j))) return bad("bang not monotone");
      if (a.bang(a.meet(i, j)) != a.ten(a.bang(i), a.bang(j)))
        return bad("bang misses the meet law");
    }
  }

  if (th.pro)
    for (int i = 0; i < n; ++i)
      if (a.bang(i) != i) return bad("pro requires bang = id");
  if (th.dne)
    for (int i = 0; i < n; ++i)
      if (a.imp(a.imp(i, 0), 0) != i) return bad("dne requires ~~a = a");
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct LatticeSkel {
  int n;
  std::vector<uint8_t> leq, meet, join;
};

// Orders on 0..n-1 with 0 bottom, n-1 top, labeled by a linear extension
// (i < j numerically whenever i < j in the order), restricted to lattices.
std::vector<LatticeSkel> enumerate_lattices(int n) {
  std::vector<LatticeSkel> out;
  if (n == 1) {
    out.push_back({1, {1}, {0}, {0}});
    return out;
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) free_pairs.push_back({i, j});

  for (uint32_t bits = 0; bits < (1u << free_pairs.size()); ++bits) {
    LatticeSkel L;
    L.n = n;
    L.leq.assign(n * n, 0);
    auto set = [&](int i, int j) { L.leq[i * n + j] = 1; };
    auto get = [&](int i, int j) { return L.leq[i * n + j] != 0; };
    for (int i = 0; i < n; ++i) {
      set(i, i);
      set(0, i);
      set(i, n - 1);
    }
    for (size_t k = 0; k < free_pairs.size(); ++k)
      if (bits >> k & 1) set(free_pairs[k].first, free_pairs[k].second);

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (get(i, j) && get(j, k) && !get(i, k)) ok = false;
    if (!ok) continue;

    L.meet.assign(n * n, 0);
    L.join.assign(n * n, 0);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int m = -1, jn = -1;
        for (int c = 0; c < n; ++c) {
          if (get(c, i) && get(c, j)) {
            bool greatest = true;
            for (int d = 0; d < n; ++d)
              if (get(d, i) && get(d, j) && !get(d, c)) { greatest = false; break; }
            if (greatest) m = c;
          }
          if (get(i, c) && get(j, c)) {
            bool least = true;
            for (int d = 0; d < n; ++d)
              if (get(i, d) && get(j, d) && !get(c, d)) { least = false; break; }
            if (least) jn = c;
          }
        }
        if (m < 0 || jn < 0) { ok = false; break; }
        L.meet[i * n + j] = (uint8_t)m;
        L.join[i * n + j] = (uint8_t)jn;
      }
    if (ok) out.push_back(std::move(L));
  }
  return out;
}

void enumerate_bangs(Algebra base, const Theory& th, std::vector<Algebra>& out) {
  int n = base.n, top = base.top();
  if (th.pro) {
    base.bang_.resize(n);
    for (int i = 0; i < n; ++i) base.bang_[i] = (uint8_t)i;
    if (algebra_valid(base, th)) out.push_back(std::move(base));
    return;
  }
  std::vector<uint8_t> b(n, 0);
  b[0] = 0;
  if (n > 1) b[top] = (uint8_t)top;

  // DFS over the middle elements in order; full law check at the leaves.
  std::vector<int> stack;
  auto rec = [&](auto&& self, int x) -> void {
    if (x > n - 2) {
      Algebra a = base;
      a.bang_ = b;
      if (algebra_valid(a, th)) out.push_back(std::move(a));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!base.leq(v, x)) continue;
      b[x] = (uint8_t)v;
      self(self, x + 1);
    }
  };
  if (n == 1) {
    Algebra a = base;
    a.bang_ = b;
    if (algebra_valid(a, th)) out.push_back(std::move(a));
  } else {
    rec(rec, 1);
  }
}

void enumerate_tensors(const LatticeSkel& L, const Theory& th, std::vector<Algebra>& out) {
  int n = L.n, top = n - 1;
  Algebra base;
  base.n = n;
  base.leq_ = L.leq;
  base.meet_ = L.meet;
  base.join_ = L.join;
  base.ten_.assign(n * n, 0);
  auto setten = [&](int i, int j, int v) {
    base.ten_[i * n + j] = (uint8_t)v;
    base.ten_[j * n + i] = (uint8_t)v;
  };
  for (int i = 0; i < n; ++i) {
    setten(i, top, i);
    setten(i, 0, 0);
  }

  std::vector<std::pair<int, int>> slots;
  for (int a = 1; a <= n - 2; ++a)
    for (int b = a; b <= n - 2; ++b) slots.push_back({a, b});

  auto finish = [&]() {
    // associativity, then residuals
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (base.ten(base.ten(i, j), k) != base.ten(i, base.ten(j, k))) return;
    base.imp_.assign(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int r = -1;
        for (int c = 0; c < n; ++c) {
          if (!base.leq(base.ten(i, c), j)) continue;
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (base.leq(base.ten(i, d), j) && !base.leq(d, c)) { greatest = false; break; }
          if (greatest) r = c;
        }
        if (r < 0) return;
        base.imp_[i * n + j] = (uint8_t)r;
      }
    if (th.pro) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (base.ten(i, j) != base.meet(i, j)) return;
    }
    if (th.dne) {
      for (int i = 0; i < n; ++i)
        if (base.imp(base.imp(i, 0), 0) != i) return;
    }
    enumerate_bangs(base, th, out);
  };

  auto rec = [&](auto&& self, size_t s) -> void {
    if (s == slots.size()) {
      finish();
      return;
    }
    auto [a, b] = slots[s];
    for (int v = 0; v <= base.meet(a, b); ++v) {
      if (!base.leq(v, base.meet(a, b))) continue;
      // monotonicity against already fixed entries
      bool ok = true;
      for (size_t t = 0; t < s && ok; ++t) {
        auto [c, d] = slots[t];
        int w = base.ten(c, d);
        if (base.leq(c, a) && base.leq(d, b) && !base.leq(w, v)) ok = false;
        if (base.leq(a, c) && base.leq(b, d) && !base.leq(v, w)) ok = false;
        if (base.leq(c, b) && base.leq(d, a) && !base.leq(w, v)) ok = false;
        if (base.leq(b, c) && base.leq(a, d) && !base.leq(v, w)) ok = false;
      }
      if (!ok) continue;
      setten(a, b, v);
      self(self, s + 1);
    }
    setten(a, b, 0);
  };
  rec(rec, 0);
}

}  // namespace

const std::vector<Algebra>& enumerate_algebras(int n, const Theory& th) {
  static std::map<int, std::vector<Algebra>> cache;
  int key = n * 4 + (th.pro ? 2 : 0) + (th.dne ? 1 : 0);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Algebra> out;
  for (const LatticeSkel& L : enumerate_lattices(n)) enumerate_tensors(L, th, out);
  return cache.emplace(key, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool term_point(const Term& t, const Valuation& v, std::map<std::string, int>& env, int* out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) return false;
      *out = it->second;
      return true;
    }
    case Term::Kind::Const: {
      auto it = v.consts.find(t.name());
      if (it == v.consts.end()) return false;
      *out = it->second;
      return true;
    }
    case Term::Kind::App:
      return false;  // no function interpretations in the finite search
  }
  return false;
}

}  // namespace

bool eval_formula(const Formula& f, const Algebra& alg, const Valuation& v,
                  std::map<std::string, int>& env, int* out) {
  switch (f.tag()) {
    case Conn::Atom: {
      auto it = v.atoms.find(f.atom_name());
      if (it == v.atoms.end()) return false;
      size_t idx = 0;
      for (const Term& t : f.atom_args()) {
        int p;
        if (!term_point(t, v, env, &p)) return false;
        idx = idx * v.domain + (size_t)p;
      }
      if (idx >= it->second.size()) return false;
      *out = it->second[idx];
      return true;
    }
    case Conn::Top:
    case Conn::One:
      *out = alg.top();
      return true;
    case Conn::Zero:
      *out = 0;
      return true;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli: {
      int l, r;
      if (!eval_formula(f.left(), alg, v, env, &l) ||
          !eval_formula(f.right(), alg, v, env, &r))
        return false;
      switch (f.tag()) {
        case Conn::Tensor: *out = alg.ten(l, r); break;
        case Conn::With: *out = alg.meet(l, r); break;
        case Conn::Plus: *out = alg.join(l, r); break;
        default: *out = alg.imp(l, r); break;
      }
      return true;
    }
    case Conn::Bang: {
      int x;
      if (!eval_formula(f.right(), alg, v, env, &x)) return false;
      *out = alg.bang(x);
      return true;
    }
    case Conn::Forall:
    case Conn::Exists: {
      bool univ = f.tag() == Conn::Forall;
      int acc = univ ? alg.top() : 0;
      auto prev = env.find(f.var());
      int saved = prev == env.end() ? -1 : prev->second;
      for (int d = 0; d < v.domain; ++d) {
        env[f.var()] = d;
        int x;
        if (!eval_formula(f.body(), alg, v, env, &x)) {
          if (saved < 0) env.erase(f.var()); else env[f.var()] = saved;
          return false;
        }
        acc = univ ? alg.meet(acc, x) : alg.join(acc, x);
      }
      if (saved < 0) env.erase(f.var()); else env[f.var()] = saved;
      *out = acc;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Countermodel search

namespace {

struct Signature {
  std::map<std::string, size_t> atom_arity;
  std::set<std::string> consts;
  std::set<std::string> freevars;
  bool has_quant = false;
  bool supported = true;  // no compound atom arguments, consistent arities
};

void scan_terms(const Term& t, Signature& sig) {
  if (t.kind() == Term::Kind::App) sig.supported = false;
  if (t.kind() == Term::Kind::Const) sig.consts.insert(t.name());
}

void scan(const Formula& f, Signature& sig) {
  switch (f.tag()) {
    case Conn::Atom: {
      auto [it, fresh] = sig.atom_arity.emplace(f.atom_name(), f.atom_args().size());
      if (!fresh && it->second != f.atom_args().size()) sig.supported = false;
      for (const Term& t : f.atom_args()) scan_terms(t, sig);
      return;
    }
    case Conn::Top:
    case Conn::Zero:
    case Conn::One:
      return;
    case Conn::Tensor:
    case Conn::With:
    case Conn::Plus:
    case Conn::Lolli:
      scan(f.left(), sig);
      scan(f.right(), sig);
      return;
    case Conn::Bang:
      scan(f.right(), sig);
      return;
    case Conn::Forall:
    case Conn::Exists:
      sig.has_quant = true;
      scan(f.body(), sig);
      return;
  }
}

bool sequent_fails(const Sequent& s, const Algebra& alg, const Valuation& v,
                   std::map<std::string, int>& env) {
  int acc = alg.top();
  for (const Formula& h : s.hyps) {
    int x;
    if (!eval_formula(h, alg, v, env, &x)) return false;
    acc = alg.ten(acc, x);
  }
  int g;
  if (!eval_formula(s.goal, alg, v, env, &g)) return false;
  return !alg.leq(acc, g);
}

}  // namespace

std::string Countermodel::text() const {
  const Algebra& a = algebra;
  std::string out = "algebra n=" + std::to_string(a.n) + " domain=" +
                    std::to_string(valuation.domain) + "\n";
  out += "leq rows:";
  for (int i = 0; i < a.n; ++i) {
    out += " ";
    for (int j = 0; j < a.n; ++j) out += a.leq(i, j) ? '1' : '0';
  }
  out += "\ntensor:";
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) out += " " + std::to_string(a.ten(i, j));
  out += "\nbang:";
  for (int i = 0; i < a.n; ++i) out += " " + std::to_string(a.bang(i));
  out += "\n";
  for (const auto& [name, tbl] : valuation.atoms) {
    out += name + " =";
    for (int x : tbl) out += " " + std::to_string(x);
    out += "\n";
  }
  for (const auto& [name, x] : valuation.consts)
    out += name + " = " + std::to_string(x) + "\n";
  out += "direction = " + std::string(direction == 0 ? "forward" : "backward") + "\n";
  return out;
}

RefuteResult find_countermodel(const Sequent& s, const Theory& th, const ModelBounds& b) {
  Signature sig;
  for (const Formula& h : s.hyps) scan(h, sig);
  scan(s.goal, sig);
  for (const Formula& h : s.hyps)
    for (const std::string& x : free_vars(h)) sig.freevars.insert(x);
  for (const std::string& x : free_vars(s.goal)) sig.freevars.insert(x);
  if (!sig.supported) return {};

  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(b.timeout_ms);

  for (int n = 1; n <= b.max_algebra; ++n) {
    const std::vector<Algebra>& algs = enumerate_algebras(n, th);
    int max_dom = sig.has_quant ? b.max_domain : 1;
    for (int dom = 1; dom <= max_dom; ++dom) {
      // slot layout: one slot per atom-table entry (radix n), then one per
      // constant and free variable (radix dom)
      std::vector<size_t> radix;
      std::vector<std::pair<std::string, size_t>> atom_layout;  // name, table size
      double total = 1;
      for (const auto& [name, arity] : sig.atom_arity) {
        size_t sz = 1;
        for (size_t k = 0; k < arity; ++k) sz *= (size_t)dom;
        atom_layout.push_back({name, sz});
        for (size_t k = 0; k < sz; ++k) radix.push_back((size_t)n);
        total *= std::pow((double)n, (double)sz);
      }
      size_t point_slots = sig.consts.size() + sig.freevars.size();
      for (size_t k = 0; k < point_slots; ++k) radix.push_back((size_t)dom);
      total *= std::pow((double)dom, (double)point_slots);
      if (total > 2e7) continue;  // bounds-limited, stays NotFound

      std::vector<size_t> digits(radix.size(), 0);
      for (const Algebra& alg : algs) {
        std::fill(digits.begin(), digits.end(), 0);
        while (true) {
          if (std::chrono::steady_clock::now() > deadline) return {};
          Valuation v;
          v.domain = dom;
          size_t pos = 0;
          for (const auto& [name, sz] : atom_layout) {
            std::vector<int>& tbl = v.atoms[name];
            tbl.reserve(sz);
            for (size_t k = 0; k < sz; ++k) tbl.push_back((int)digits[pos++]);
          }
          std::map<std::string, int> env;
          for (const std::string& name : sig.consts) v.consts[name] = (int)digits[pos++];
          for (const std::string& name : sig.freevars) env[name] = (int)digits[pos++];

          if (sequent_fails(s, alg, v, env) && algebra_valid(alg, th)) {
            // re-validate from scratch before reporting
            std::map<std::string, int> env2 = env;
            if (sequent_fails(s, alg, v, env2)) {
              RefuteResult r;
              r.verdict = SearchVerdict::Found;
              r.cm.algebra = alg;
              r.cm.valuation = v;
              return r;
            }
          }

          size_t i = 0;
          for (; i < digits.size(); ++i) {
            if (++digits[i] < radix[i]) break;
            digits[i] = 0;
          }
          if (i == digits.size()) break;
        }
      }
    }
  }
  return {};
}

RefuteResult find_countermodel_equiv(const Formula& a, const Formula& b, const Theory& th,
                                     const ModelBounds& bounds) {
  ModelBounds half = bounds;
  half.timeout_ms = bounds.timeout_ms / 2;
  RefuteResult fwd = find_countermodel({{a}, b}, th, half);
  if (fwd.found()) {
    fwd.cm.direction = 0;
    return fwd;
  }
  RefuteResult bwd = find_countermodel({{b}, a}, th, half);
  if (bwd.found()) bwd.cm.direction = 1;
  return bwd;
}

}  // namespace illtrans
