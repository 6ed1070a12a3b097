#pragma once

// The two equivalence matrices driving the simplification results:
//
//   nn:    double-negation equivalences, checked in IL_b and ILL
//   bang:  !-equivalences, checked in ILL (valid rows re-checked in CLL_b)
//
// Every expected-valid cell is confirmed by the prover; every
// expected-invalid cell by finite countermodel search.  Cells that cannot
// be settled within bounds stay INCONCLUSIVE; the nn forall-fusion row is
// never searched (INCONCLUSIVE-NEGATIVE), since its failure needs models
// beyond the finite bounds (in Heyting algebras ~~ preserves finite meets).

#include <string>
#include <vector>

#include "models.hpp"
#include "prover.hpp"

namespace illtrans {

enum class TableId { NegNeg, Bang };

const char* table_name(TableId id);  // "nn", "bang"
bool table_from_name(const std::string& name, TableId* out);

enum class RowStatus { Proved, Refuted, Inconclusive, InconclusiveNegative };
const char* row_status_name(RowStatus s);

struct TableCell {
  Theory theory;
  bool expected_valid = true;
  bool skip_refutation = false;
  RowStatus status = RowStatus::Inconclusive;
  std::string note;
  ProofPtr forward, backward;  // set when status == Proved

  bool confirmed() const {
    return expected_valid ? status == RowStatus::Proved : status == RowStatus::Refuted;
  }
  // A contradiction would be Proved where invalidity is expected or
  // Refuted where validity is expected; one-sided checking plus sound
  // models make that impossible short of a bug, but report it anyway.
  bool contradicted() const {
    return expected_valid ? status == RowStatus::Refuted : status == RowStatus::Proved;
  }
};

struct TableRow {
  std::string label;  // "(i)" .. "(xv)"
  Formula lhs, rhs;
  std::vector<TableCell> cells;
};

struct TableBounds {
  Budget budget;       // per expected-valid cell
  ModelBounds models;  // per expected-invalid cell
};

struct TableReport {
  TableId id;
  std::vector<TableRow> rows;
  size_t unproved_valid = 0;    // expected-valid cells not Proved
  size_t unrefuted_invalid = 0; // expected-invalid cells left Inconclusive
  size_t skipped = 0;           // InconclusiveNegative cells
  size_t contradictions = 0;
};

std::vector<TableRow> table_rows(TableId id);  // definitions, unchecked
TableReport check_table(TableId id, const TableBounds& b);
std::string report_to_text(const TableReport& r, bool with_countermodels = false);

}  // namespace illtrans
