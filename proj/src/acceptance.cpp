#include "acceptance.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "corpus.hpp"
#include "models.hpp"
#include "prover.hpp"
#include "replay.hpp"
#include "rewrite.hpp"
#include "syntax.hpp"
#include "tables.hpp"
#include "xlate.hpp"

namespace illtrans {

namespace {

struct RegisteredProof {
  ProofPtr tree;
  Theory th;
  std::vector<Sequent> axioms;
};

struct Runner {
  AcceptanceOptions opt;
  std::vector<RegisteredProof> proofs;
  std::mutex mu;

  unsigned threads() const {
    unsigned n = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    return n ? n : 1;
  }

  void reg(ProofPtr t, const Theory& th, std::vector<Sequent> axioms = {}) {
    if (!t) return;
    std::lock_guard<std::mutex> lock(mu);
    proofs.push_back({std::move(t), th, std::move(axioms)});
  }

  bool prove_reg(const Sequent& s, const Theory& th, const Budget& b, std::string* why) {
    ProofResult r = prove(s, th, b);
    if (!r.proved()) {
      if (why) *why += "not proved in " + std::string(th.name()) + ": " + sequent_to_text(s) + "; ";
      return false;
    }
    reg(r.tree, th);
    return true;
  }

  bool equiv_reg(const Formula& a, const Formula& b, const Theory& th, const Budget& bud,
                 std::string* why) {
    EquivResult e = check_equiv(a, b, th, bud);
    if (!e.equivalent) {
      if (why)
        *why += "equivalence unproved in " + std::string(th.name()) + ": " + print(a) +
                "  ~  " + print(b) + "; ";
      return false;
    }
    reg(e.forward, th);
    reg(e.backward, th);
    return true;
  }

  CriterionResult timed(int id, const char* name, const std::function<bool(std::string&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    r.passed = body(detail);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.detail = detail;
    if (opt.on_result) opt.on_result(r);
    return r;
  }

  // -- 1: worked rewriting example, byte-exact ------------------------------

  bool ac1(std::string& detail) {
    const std::string g_in = "~~(~~(~~P & ~~Q) * ~~R)";
    const std::string g_inside = "~~((~~P & ~~Q) * ~~R)";
    const std::string g_mid = "~~(~~P & ~~Q) * ~~R";
    const std::string g_out = "(~~P & ~~Q) * ~~R";

    Formula a = parse_ill("(P & Q) * R");
    Formula k = kolmogorov(a, Presentation::Outer);
    if (print(k) != g_in) {
      detail = "kolmogorov output " + print(k) + " != " + g_in;
      return false;
    }
    std::vector<TraceEntry> trace;
    Formula out = apply(k, rules_for(SimplificationId::GGfromKolmO), Strategy::Outside, &trace);
    if (print(out) != g_out) {
      detail = "outside result " + print(out) + " != " + g_out;
      return false;
    }
    if (trace.empty() || print(trace[0].after) != g_mid) {
      detail = "missing intermediate " + g_mid;
      return false;
    }
    Formula in = apply(k, rules_for(SimplificationId::GGfromKolmO), Strategy::Inside);
    if (print(in) != g_inside) {
      detail = "inside result " + print(in) + " != " + g_inside;
      return false;
    }
    detail = g_in + "  ->o  " + g_out + " (via " + g_mid + "), ->i " + g_inside;
    return true;
  }

  // -- 2: six simplification identities on a random corpus ------------------

  bool ac2(std::string& detail) {
    CorpusParams p;
    p.seed = 271828;
    p.count = 1000;
    p.max_depth = 6;
    std::vector<Formula> corpus = random_ill(p);
    size_t failures = 0;
    for (int i = 0; i < 6; ++i) {
      SimplificationId id = (SimplificationId)i;
      SimplificationReport rep = check_simplification(id, corpus);
      if (rep.failures) {
        failures += rep.failures;
        detail += std::string(simplification_name(id)) + ": " +
                  std::to_string(rep.failures) + " failures; ";
      }
    }
    if (!failures) detail = "6 ids x 1000 formulas, 0 failures";
    return failures == 0;
  }

  // -- 3 and 4: the equivalence matrices ------------------------------------

  const TableCell* find_cell(const TableReport& rep, const std::string& label,
                             const char* theory) {
    for (const TableRow& r : rep.rows)
      if (r.label == label)
        for (const TableCell& c : r.cells)
          if (std::string(c.theory.name()) == theory) return &c;
    return nullptr;
  }

  void reg_table(const TableReport& rep) {
    for (const TableRow& r : rep.rows)
      for (const TableCell& c : r.cells) {
        reg(c.forward, c.theory);
        reg(c.backward, c.theory);
      }
  }

  bool check_matrix(const TableReport& rep, const std::vector<std::pair<std::string, const char*>>& must_refute,
                    std::string& detail) {
    bool ok = true;
    std::string misses;
    for (const TableRow& r : rep.rows)
      for (const TableCell& c : r.cells) {
        if (c.expected_valid && c.status != RowStatus::Proved) {
          ok = false;
          detail += r.label + " [" + c.theory.name() + "] expected valid, got " +
                    row_status_name(c.status) + "; ";
        }
        if (!c.expected_valid && c.status == RowStatus::Inconclusive)
          misses += r.label + " [" + c.theory.name() + "] ";
      }
    if (rep.contradictions) {
      ok = false;
      detail += std::to_string(rep.contradictions) + " contradictions; ";
    }
    for (const auto& [label, theory] : must_refute) {
      const TableCell* c = find_cell(rep, label, theory);
      if (!c || c->status != RowStatus::Refuted) {
        ok = false;
        detail += label + " [" + std::string(theory) + "] not refuted; ";
      }
    }
    if (!misses.empty())
      detail += "inconclusive within bounds (algebra<=6, domain<=3): " + misses;
    return ok;
  }

  TableBounds table_bounds() {
    TableBounds tb;
    tb.budget.max_depth = 24;
    tb.budget.timeout_ms = 10000;
    tb.models.max_algebra = 6;
    tb.models.max_domain = 3;
    tb.models.timeout_ms = 30000;
    return tb;
  }

  bool ac3(std::string& detail) {
    TableReport rep = check_table(TableId::NegNeg, table_bounds());
    reg_table(rep);
    bool ok = check_matrix(rep,
                           {{"(ix)", "ILL"}, {"(xi)", "IL_b"}, {"(xi)", "ILL"},
                            {"(xiv)", "IL_b"}, {"(xiv)", "ILL"}},
                           detail);
    for (const char* th : {"IL_b", "ILL"}) {
      const TableCell* c = find_cell(rep, "(vi)", th);
      if (!c || c->status != RowStatus::InconclusiveNegative) {
        ok = false;
        detail += std::string("(vi) [") + th + "] must be INCONCLUSIVE-NEGATIVE (~~ preserves finite meets, so finite models cannot refute it); ";
      }
    }
    if (ok && detail.empty()) detail = "19 valid cells proved, required refutations found, (vi) skipped by design";
    return ok;
  }

  bool ac4(std::string& detail) {
    TableReport rep = check_table(TableId::Bang, table_bounds());
    reg_table(rep);
    bool ok = check_matrix(rep, {}, detail);
    size_t refuted = 0, invalid = 0;
    for (const TableRow& r : rep.rows)
      for (const TableCell& c : r.cells)
        if (!c.expected_valid) {
          ++invalid;
          if (c.status == RowStatus::Refuted) ++refuted;
        }
    detail += "invalid cells refuted: " + std::to_string(refuted) + "/" +
              std::to_string(invalid) + " (best effort, each model re-validated)";
    return ok;
  }

  // -- 5: lemma suite -------------------------------------------------------

  bool ac5(std::string& detail) {
    bool ok = true;
    Theory ilb = Theory::ilb(), cllb = Theory::cllb();
    Budget b;
    b.max_depth = 24;
    b.timeout_ms = 15000;
    Formula P = Formula::atom("P"), Q = Formula::atom("Q");

    ok &= equiv_reg(P, Formula::bang(P), ilb, b, &detail);
    ok &= equiv_reg(Formula::with(P, Q), Formula::tensor(P, Q), ilb, b, &detail);
    ok &= equiv_reg(Formula::top(), Formula::one(), ilb, b, &detail);

    CorpusParams cp;
    cp.seed = 577215;
    cp.count = 100;
    cp.max_depth = 4;
    size_t l2_bad = 0;
    for (const Formula& a : random_ill(cp))
      if (girard_circ(neg(neg(a)), false) != quest(Formula::bang(girard_circ(a, false))))
        ++l2_bad;
    if (l2_bad) {
      ok = false;
      detail += "core-of-double-negation identity failed on " + std::to_string(l2_bad) +
                "/100 formulas; ";
    }

    // derived rules, premises used as axiom leaves
    Formula G = Formula::atom("G"), A = Formula::atom("A"), B = Formula::atom("B");
    Formula bG = Formula::bang(G);
    std::vector<Sequent> ax1 = {{{bG, A}, quest(B)}};
    ProofResult d1 = prove_with_axioms({{bG, quest(A)}, quest(B)}, cllb, b, ax1);
    if (d1.proved()) {
      reg(d1.tree, cllb, ax1);
    } else {
      ok = false;
      detail += "derived rule ?L failed; ";
    }
    Formula C = Formula::atom("C");
    std::vector<Sequent> ax2 = {{{C}, B}};
    ProofResult d2 = prove_with_axioms({{C}, quest(B)}, cllb, b, ax2);
    if (d2.proved()) {
      reg(d2.tree, cllb, ax2);
    } else {
      ok = false;
      detail += "derived rule ?R failed; ";
    }

    auto bb = [](Formula f) { return Formula::bang(std::move(f)); };
    ok &= equiv_reg(bb(bb(P)), bb(P), cllb, b, &detail);
    ok &= equiv_reg(bb(quest(bb(quest(P)))), bb(quest(P)), cllb, b, &detail);
    ok &= equiv_reg(quest(bb(quest(bb(P)))), quest(bb(P)), cllb, b, &detail);
    if (ok) detail = "absorption, core identity (100 random), derived ? rules, modality collapses";
    return ok;
  }

  // -- 6: composition theorems ----------------------------------------------

  bool ac6(std::string& detail) {
    struct Case {
      ComposedId id;
      TranslationId first, second;
    };
    const Case cases[] = {
        {ComposedId::GCirc, TranslationId::GG, TranslationId::Circ},
        {ComposedId::GStar, TranslationId::GG, TranslationId::Star},
        {ComposedId::KuCirc, TranslationId::Kuroda, TranslationId::Circ},
        {ComposedId::KuStar, TranslationId::Kuroda, TranslationId::Star},
    };

    Formula P = Formula::atom("P");
    Formula golden = Formula::bang(quest(Formula::bang(P)));
    for (const Case& c : cases)
      if (composed(P, c.id) != golden) {
        detail = "atom clause mismatch for composed id " + std::to_string((int)c.id) +
                 ": " + print(composed(P, c.id));
        return false;
      }

    std::vector<Formula> forms = enumerate_ill(2, 2);
    Theory cllb = Theory::cllb();
    Budget b;
    b.max_depth = 30;
    b.timeout_ms = 8000;

    // The four thousand pairs are structurally parallel, so congruence
    // decomposition with shared memoization leaves only about a thousand
    // distinct leaf obligations; the countermodel filter keeps the prover
    // off the non-equivalent subterm pairs.
    EquivalenceChecker chk(cllb, b);
    ModelBounds mb;
    mb.max_algebra = 5;
    mb.max_domain = 1;
    mb.timeout_ms = 1000;
    chk.refuter = [&](const Sequent& s) {
      return find_countermodel(s, cllb, mb).verdict == SearchVerdict::Found;
    };

    size_t failures = 0, total = forms.size() * 4;
    std::string fail_detail;
    for (const Formula& f : forms) {
      for (size_t ci = 0; ci < 4; ++ci) {
        const Case& c = cases[ci];
        Formula lit = compose_literal(f, c.first, c.second);
        Formula def = composed(f, c.id);
        if (lit == def) continue;  // often syntactically identical already
        if (!chk.equivalent(lit, def)) {
          ++failures;
          if (fail_detail.size() < 400)
            fail_detail += print(f) + " (case " + std::to_string(ci) + "); ";
        }
      }
    }
    for (const ProofPtr& p : chk.direct_proofs()) reg(p, cllb);

    if (failures) {
      detail = std::to_string(failures) + "/" + std::to_string(total) +
               " compositions unproved: " + fail_detail;
      return false;
    }
    detail = std::to_string(forms.size()) + " formulas x 4 compositions equivalent, atom goldens exact";
    return true;
  }

  // -- 7: soundness spot checks ---------------------------------------------

  bool ac7(std::string& detail) {
    bool ok = true;
    Theory ill = Theory::ill(), ilb = Theory::ilb(), cllb = Theory::cllb(), clb = Theory::clb();
    Budget b;
    b.max_depth = 30;
    b.timeout_ms = 20000;

    std::vector<Formula> items = {
        parse_ill("~~P -o P"),
        parse_ill("P + ~P"),
        parse_ill("((P -o Q) -o P) -o P"),
        parse_ill("(forall x. ~~P(x)) -o ~~(forall x. P(x))"),
    };
    Budget probe = b;
    probe.timeout_ms = 5000;
    for (const Formula& f : items) {
      ok &= prove_reg({{}, f}, clb, b, &detail);
      ok &= prove_reg({{}, godel_gentzen(f)}, ilb, b, &detail);
      ok &= prove_reg({{}, kuroda(f)}, ilb, b, &detail);
      bool in_cllb = prove(Sequent{{}, f}, cllb, probe).proved();
      if (in_cllb) {
        // only theorems of the dne fragment have PRO-free translations
        ok &= prove_reg({{}, kolmogorov(f, Presentation::Outer)}, ill, b, &detail);
        ok &= prove_reg({{}, linear_kuroda(f)}, ill, b, &detail);
      } else {
        ok &= prove_reg({{}, kolmogorov(f, Presentation::Outer)}, ilb, b, &detail);
      }
    }

    ModelBounds mb;
    mb.timeout_ms = 30000;
    // Both inputs are CLL_b theorems, but the non-linear translations fail
    // to carry them into ILL; their linear variants would be provable here,
    // so only the plain GG and Kuroda forms work as negative controls.
    Formula neg1 = godel_gentzen(parse_ill("~~(P * Q) -o P * Q"));
    Formula neg2 = kuroda(parse_ill("~~P -o P"));
    for (const Formula& f : {neg1, neg2}) {
      RefuteResult rr = find_countermodel({{}, f}, ill, mb);
      if (!rr.found()) {
        ok = false;
        detail += "negative control not refuted: " + print(f) + "; ";
      }
    }
    if (ok) detail = "4 theorems translated and proved, 2 negative controls refuted";
    return ok;
  }

  // -- 8: parser round trips ------------------------------------------------

  bool ac8(std::string& detail) {
    size_t failures = 0;
    CorpusParams p;
    p.count = 10000;
    p.max_depth = 6;
    p.atoms = 4;

    p.seed = 11;
    for (const Formula& a : random_ill(p))
      if (!alpha_eq(parse_ill(print(a)), a)) ++failures;
    p.seed = 12;
    for (const SourceFormulaIL& a : random_il(p))
      if (!alpha_eq(parse_il(print(a)), a)) ++failures;
    p.seed = 13;
    for (const SourceFormulaCLL& a : random_cll(p))
      if (!alpha_eq(parse_cll(print(a)), a)) ++failures;

    detail = failures ? std::to_string(failures) + " round-trip failures"
                      : "30000 formulas across 3 languages, 0 failures";
    return failures == 0;
  }

  // -- 9: proof replay ------------------------------------------------------

  bool ac9(std::string& detail) {
    size_t bad = 0;
    std::string first;
    for (const RegisteredProof& p : proofs) {
      ReplayResult r = replay_check(*p.tree, p.th, p.axioms);
      if (!r.ok) {
        ++bad;
        if (first.empty()) first = r.reason;
      }
    }
    if (proofs.empty()) {
      detail = "no proofs registered";
      return false;
    }
    detail = std::to_string(proofs.size() - bad) + "/" + std::to_string(proofs.size()) +
             " proofs replayed";
    if (bad) detail += "; first failure: " + first;
    return bad == 0;
  }
};

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& opt) {
  Runner r;
  r.opt = opt;
  AcceptanceReport rep;
  rep.results.push_back(r.timed(1, "worked-example-exactness", [&](std::string& d) { return r.ac1(d); }));
  rep.results.push_back(r.timed(2, "simplification-identities", [&](std::string& d) { return r.ac2(d); }));
  rep.results.push_back(r.timed(3, "nn-equivalence-matrix", [&](std::string& d) { return r.ac3(d); }));
  rep.results.push_back(r.timed(4, "bang-equivalence-matrix", [&](std::string& d) { return r.ac4(d); }));
  rep.results.push_back(r.timed(5, "lemma-suite", [&](std::string& d) { return r.ac5(d); }));
  rep.results.push_back(r.timed(6, "composition-theorems", [&](std::string& d) { return r.ac6(d); }));
  rep.results.push_back(r.timed(7, "soundness-spot-checks", [&](std::string& d) { return r.ac7(d); }));
  rep.results.push_back(r.timed(8, "parser-round-trip", [&](std::string& d) { return r.ac8(d); }));
  rep.results.push_back(r.timed(9, "proof-replay", [&](std::string& d) { return r.ac9(d); }));
  return rep;
}

std::string acceptance_to_text(const AcceptanceReport& r) {
  std::ostringstream out;
  for (const CriterionResult& c : r.results) {
    out << "AC" << c.id << " " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " ("
        << std::fixed;
    out.precision(2);
    out << c.seconds << "s)";
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  out << (r.all_passed() ? "acceptance: ALL PASS" : "acceptance: FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace illtrans
