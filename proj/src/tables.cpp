#include "tables.hpp"

#include "syntax.hpp"

namespace illtrans {

const char* table_name(TableId id) { return id == TableId::NegNeg ? "nn" : "bang"; }

bool table_from_name(const std::string& name, TableId* out) {
  if (name == "nn") {
    *out = TableId::NegNeg;
    return true;
  }
  if (name == "bang") {
    *out = TableId::Bang;
    return true;
  }
  return false;
}

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Proved: return "PROVED";
    case RowStatus::Refuted: return "REFUTED";
    case RowStatus::Inconclusive: return "INCONCLUSIVE";
    case RowStatus::InconclusiveNegative: return "INCONCLUSIVE-NEGATIVE";
  }
  return "?";
}

namespace {

Formula nn(const Formula& a) { return neg(neg(a)); }

TableRow row(const char* label, Formula lhs, Formula rhs, std::vector<TableCell> cells) {
  return {label, std::move(lhs), std::move(rhs), std::move(cells)};
}

TableCell cell(Theory th, bool valid, bool skip = false) {
  TableCell c;
  c.theory = th;
  c.expected_valid = valid;
  c.skip_refutation = skip;
  if (skip)
    c.note = "never searched: failure needs models outside the finite bounds";
  return c;
}

std::vector<TableRow> negneg_rows() {
  Formula P = Formula::atom("P"), Q = Formula::atom("Q");
  Formula Px = Formula::atom("P", {Term::var("x")});
  Theory ilb = Theory::ilb(), ill = Theory::ill();
  auto both = [&](bool in_ilb, bool in_ill, bool skip = false) {
    return std::vector<TableCell>{cell(ilb, in_ilb, skip && !in_ilb),
                                  cell(ill, in_ill, skip && !in_ill)};
  };
  auto fa = [&](Formula b) { return Formula::forall("x", std::move(b)); };
  auto ex = [&](Formula b) { return Formula::exists("x", std::move(b)); };

  std::vector<TableRow> rows;
  rows.push_back(row("(i)", nn(Formula::tensor(nn(P), nn(Q))), nn(Formula::tensor(P, Q)),
                     both(true, true)));
  rows.push_back(row("(ii)", nn(Formula::with(nn(P), nn(Q))), nn(Formula::with(P, Q)),
                     both(true, false)));
  rows.push_back(row("(iii)", nn(Formula::plus(nn(P), nn(Q))), nn(Formula::plus(P, Q)),
                     both(true, true)));
  rows.push_back(row("(iv)", nn(Formula::lolli(nn(P), nn(Q))), nn(Formula::lolli(P, Q)),
                     both(true, false)));
  rows.push_back(row("(v)", nn(Formula::lolli(nn(P), nn(Q))), nn(Formula::lolli(P, nn(Q))),
                     both(true, true)));
  rows.push_back(row("(vi)", nn(fa(nn(Px))), nn(fa(Px)), both(false, false, true)));
  rows.push_back(row("(vii)", nn(ex(nn(Px))), nn(ex(Px)), both(true, true)));
  rows.push_back(row("(viii)", nn(Formula::bang(nn(P))), nn(Formula::bang(P)),
                     both(true, false)));
  rows.push_back(row("(ix)", nn(Formula::tensor(nn(P), nn(Q))), Formula::tensor(nn(P), nn(Q)),
                     both(true, false)));
  rows.push_back(row("(x)", nn(Formula::with(nn(P), nn(Q))), Formula::with(nn(P), nn(Q)),
                     both(true, true)));
  rows.push_back(row("(xi)", nn(Formula::plus(nn(P), nn(Q))), Formula::plus(nn(P), nn(Q)),
                     both(false, false)));
  rows.push_back(row("(xii)", nn(Formula::lolli(nn(P), nn(Q))), Formula::lolli(nn(P), nn(Q)),
                     both(true, true)));
  rows.push_back(row("(xiii)", nn(fa(nn(Px))), fa(nn(Px)), both(true, true)));
  rows.push_back(row("(xiv)", nn(ex(nn(Px))), ex(nn(Px)), both(false, false)));
  rows.push_back(row("(xv)", nn(Formula::bang(nn(P))), Formula::bang(nn(P)),
                     both(true, false)));
  return rows;
}

std::vector<TableRow> bang_rows() {
  Formula P = Formula::atom("P"), Q = Formula::atom("Q");
  Formula Px = Formula::atom("P", {Term::var("x")});
  Theory ill = Theory::ill(), cllb = Theory::cllb();
  auto bp = [&](Formula f) { return Formula::bang(std::move(f)); };
  // valid rows are re-checked in CLL_b, per the conservativity footnote
  auto cols = [&](bool valid) {
    std::vector<TableCell> cs{cell(ill, valid)};
    if (valid) cs.push_back(cell(cllb, true));
    return cs;
  };
  auto fa = [&](Formula b) { return Formula::forall("x", std::move(b)); };
  auto ex = [&](Formula b) { return Formula::exists("x", std::move(b)); };

  std::vector<TableRow> rows;
  rows.push_back(row("(i)", bp(Formula::tensor(bp(P), bp(Q))), Formula::tensor(bp(P), bp(Q)),
                     cols(true)));
  rows.push_back(row("(ii)", bp(Formula::with(bp(P), bp(Q))), Formula::with(bp(P), bp(Q)),
                     cols(false)));
  rows.push_back(row("(iii)", bp(Formula::plus(bp(P), bp(Q))), Formula::plus(bp(P), bp(Q)),
                     cols(true)));
  rows.push_back(row("(iv)", bp(Formula::lolli(bp(P), bp(Q))), Formula::lolli(bp(P), bp(Q)),
                     cols(false)));
  rows.push_back(row("(v)", bp(fa(bp(Px))), fa(bp(Px)), cols(false)));
  rows.push_back(row("(vi)", bp(ex(bp(Px))), ex(bp(Px)), cols(true)));
  rows.push_back(row("(vii)", bp(bp(bp(P))), bp(bp(P)), cols(true)));
  rows.push_back(row("(viii)", bp(Formula::tensor(bp(P), bp(Q))), bp(Formula::tensor(P, Q)),
                     cols(false)));
  rows.push_back(row("(ix)", bp(Formula::with(bp(P), bp(Q))), bp(Formula::with(P, Q)),
                     cols(true)));
  rows.push_back(row("(x)", bp(Formula::lolli(bp(P), bp(Q))), bp(Formula::lolli(P, Q)),
                     cols(false)));
  rows.push_back(row("(xi)", bp(Formula::lolli(bp(P), bp(Q))), bp(Formula::lolli(bp(P), Q)),
                     cols(true)));
  rows.push_back(row("(xii)", bp(fa(bp(Px))), bp(fa(Px)), cols(true)));
  rows.push_back(row("(xiii)", bp(ex(bp(Px))), bp(ex(Px)), cols(false)));
  return rows;
}

}  // namespace

std::vector<TableRow> table_rows(TableId id) {
  return id == TableId::NegNeg ? negneg_rows() : bang_rows();
}

TableReport check_table(TableId id, const TableBounds& b) {
  TableReport rep;
  rep.id = id;
  rep.rows = table_rows(id);
  for (TableRow& r : rep.rows) {
    for (TableCell& c : r.cells) {
      if (c.expected_valid) {
        EquivResult e = check_equiv(r.lhs, r.rhs, c.theory, b.budget);
        c.status = e.equivalent ? RowStatus::Proved : RowStatus::Inconclusive;
        c.forward = e.forward;
        c.backward = e.backward;
        if (!e.equivalent) ++rep.unproved_valid;
      } else if (c.skip_refutation) {
        c.status = RowStatus::InconclusiveNegative;
        ++rep.skipped;
      } else {
        RefuteResult rr = find_countermodel_equiv(r.lhs, r.rhs, c.theory, b.models);
        if (rr.found()) {
          c.status = RowStatus::Refuted;
          c.note = rr.cm.text();
        } else {
          c.status = RowStatus::Inconclusive;
          ++rep.unrefuted_invalid;
        }
      }
      if (c.contradicted()) ++rep.contradictions;
    }
  }
  return rep;
}

std::string report_to_text(const TableReport& r, bool with_countermodels) {
  std::string out = std::string("table ") + table_name(r.id) + "\n";
  for (const TableRow& row : r.rows) {
    for (const TableCell& c : row.cells) {
      out += row.label;
      out += " [" + std::string(c.theory.name()) + "] ";
      out += print(row.lhs) + "  ~  " + print(row.rhs);
      out += "  expected=" + std::string(c.expected_valid ? "valid" : "invalid");
      out += "  status=" + std::string(row_status_name(c.status));
      out += c.confirmed() ? "  ok" : (c.contradicted() ? "  CONTRADICTION" : "  unconfirmed");
      out += "\n";
      if (!c.note.empty() && (with_countermodels || c.status != RowStatus::Refuted))
        out += "  " + c.note + "\n";
    }
  }
  out += "unproved_valid=" + std::to_string(r.unproved_valid) +
         " unrefuted_invalid=" + std::to_string(r.unrefuted_invalid) +
         " skipped=" + std::to_string(r.skipped) +
         " contradictions=" + std::to_string(r.contradictions) + "\n";
  return out;
}

}  // namespace illtrans
