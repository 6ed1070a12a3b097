#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "syntax.hpp"
#include "tables.hpp"

using namespace illtrans;

TEST_CASE("table names round trip") {
  TableId id;
  REQUIRE(table_from_name("nn", &id));
  CHECK(id == TableId::NegNeg);
  REQUIRE(table_from_name("bang", &id));
  CHECK(id == TableId::Bang);
  CHECK(!table_from_name("quest", &id));
  CHECK(std::string(table_name(TableId::NegNeg)) == "nn");
  CHECK(std::string(table_name(TableId::Bang)) == "bang");
}

TEST_CASE("double negation table shape") {
  std::vector<TableRow> rows = table_rows(TableId::NegNeg);
  REQUIRE(rows.size() == 15);
  CHECK(rows.front().label == "(i)");
  CHECK(rows.back().label == "(xv)");
  for (const TableRow& r : rows) {
    REQUIRE(r.cells.size() == 2);
    CHECK(std::string(r.cells[0].theory.name()) == "IL_b");
    CHECK(std::string(r.cells[1].theory.name()) == "ILL");
  }
  // spot checks against the definitions
  CHECK(rows[0].lhs == parse_ill("~~(~~P * ~~Q)"));
  CHECK(rows[0].rhs == parse_ill("~~(P * Q)"));
  CHECK(rows[7].lhs == parse_ill("~?~P"));
  CHECK(rows[7].rhs == parse_ill("~~!P"));
  // the forall-fusion row is marked as never searched in both theories
  CHECK(rows[5].lhs == parse_ill("~~(forall x. ~~P(x))"));
  for (const TableCell& c : rows[5].cells) {
    CHECK(!c.expected_valid);
    CHECK(c.skip_refutation);
  }
  // every other cell is searched
  for (size_t i = 0; i < rows.size(); i++) {
    if (i == 5) continue;
    for (const TableCell& c : rows[i].cells) CHECK(!c.skip_refutation);
  }
}

TEST_CASE("exponential table shape") {
  std::vector<TableRow> rows = table_rows(TableId::Bang);
  REQUIRE(rows.size() == 13);
  size_t valid = 0, invalid = 0;
  for (const TableRow& r : rows) {
    REQUIRE(!r.cells.empty());
    if (r.cells[0].expected_valid) {
      // valid rows carry a second cell re-checking the claim in CLL_b
      valid++;
      REQUIRE(r.cells.size() == 2);
      CHECK(std::string(r.cells[0].theory.name()) == "ILL");
      CHECK(std::string(r.cells[1].theory.name()) == "CLL_b");
      CHECK(r.cells[1].expected_valid);
    } else {
      invalid++;
      CHECK(r.cells.size() == 1);
      CHECK(std::string(r.cells[0].theory.name()) == "ILL");
    }
  }
  CHECK(valid == 7);
  CHECK(invalid == 6);
  CHECK(rows[6].lhs == parse_ill("!!!P"));
  CHECK(rows[6].rhs == parse_ill("!!P"));
}

TEST_CASE("checking the exponential table") {
  TableBounds tb;
  TableReport rep = check_table(TableId::Bang, tb);
  CHECK(rep.id == TableId::Bang);
  CHECK(rep.unproved_valid == 0);
  CHECK(rep.contradictions == 0);
  CHECK(rep.skipped == 0);
  // row (viii) is expected-invalid but every finite algebra of this class
  // validates it, so it stays inconclusive; the other five refute
  CHECK(rep.unrefuted_invalid == 1);
  const TableRow& viii = rep.rows[7];
  REQUIRE(viii.cells.size() == 1);
  CHECK(viii.cells[0].status == RowStatus::Inconclusive);
  CHECK(!viii.cells[0].confirmed());
  CHECK(!viii.cells[0].contradicted());
  for (const TableRow& r : rep.rows) {
    for (const TableCell& c : r.cells) {
      if (c.expected_valid) {
        CHECK(c.status == RowStatus::Proved);
        CHECK(c.forward);
        CHECK(c.backward);
      }
    }
  }
}

TEST_CASE("checking the double negation table") {
  TableBounds tb;
  TableReport rep = check_table(TableId::NegNeg, tb);
  CHECK(rep.unproved_valid == 0);
  CHECK(rep.contradictions == 0);
  CHECK(rep.unrefuted_invalid == 0);
  CHECK(rep.skipped == 2);  // the two never-searched forall-fusion cells
  for (const TableCell& c : rep.rows[5].cells) {
    CHECK(c.status == RowStatus::InconclusiveNegative);
  }
}

TEST_CASE("report text") {
  TableBounds tb;
  TableReport rep = check_table(TableId::Bang, tb);
  std::string text = report_to_text(rep);
  CHECK(text.find("table bang") != std::string::npos);
  CHECK(text.find("(viii) [ILL]") != std::string::npos);
  CHECK(text.find("status=INCONCLUSIVE") != std::string::npos);
  CHECK(text.find("status=PROVED") != std::string::npos);
  CHECK(text.find("status=REFUTED") != std::string::npos);
  CHECK(text.find("unproved_valid=0") != std::string::npos);
}

TEST_CASE("row status names") {
  CHECK(std::string(row_status_name(RowStatus::Proved)) == "PROVED");
  CHECK(std::string(row_status_name(RowStatus::Refuted)) == "REFUTED");
  CHECK(std::string(row_status_name(RowStatus::Inconclusive)) == "INCONCLUSIVE");
  CHECK(std::string(row_status_name(RowStatus::InconclusiveNegative)) == "INCONCLUSIVE-NEGATIVE");
}
