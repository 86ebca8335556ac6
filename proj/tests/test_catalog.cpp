#include <doctest.h>

#include "oracle.hpp"
#include "ulrich/catalog.hpp"
#include "ulrich/error.hpp"

using namespace ulrich;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("table rows match the hand-computed fixture") {
  const auto rows = table1();
  const auto& fixture = oracle::table1_fixture();
  REQUIRE(rows.size() == fixture.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    const auto d = derived_invariants(rows[i]);
    CHECK(d.h2 == fixture[i].h2);
    CHECK(d.hK == fixture[i].hK);
    CHECK(d.K2 == fixture[i].K2);
    REQUIRE(d.N);
    CHECK(*d.N == fixture[i].N);
    const auto& e = table1_expectations()[i];
    CHECK(e.degree == fixture[i].h2);
    CHECK(e.hK == fixture[i].hK);
    CHECK(e.K2 == fixture[i].K2);
    CHECK(e.N == fixture[i].N);
  }
  CHECK(verify_table1().passed());
}

TEST_CASE("printed second row is rejected") {
  const auto printed = table1_printed_row2();
  const auto d = derived_invariants(printed);
  REQUIRE(d.N);
  CHECK(*d.N == 5);
  const auto report = verify_table1({printed}, {table1_expectations()[1]});
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.rows.at(0).diff().empty());
}

TEST_CASE("verification failure is raised on mismatches") {
  auto rows = table1();
  rows[1] = table1_printed_row2();
  CHECK_FALSE(verify_table1(rows, table1_expectations()).passed());
}

TEST_CASE("del Pezzo constructor") {
  for (int d = 3; d <= 9; ++d) {
    const auto s = del_pezzo(d);
    const auto inv = derived_invariants(s);
    CHECK(inv.h2 == d);
    CHECK(inv.hK == -d);
    CHECK(inv.K2 == d);
    CHECK(inv.pi == 1);
  }
  CHECK(code_of([] { del_pezzo(2); }) == ErrorCode::InvalidDegree);
  CHECK(code_of([] { del_pezzo(10); }) == ErrorCode::InvalidDegree);
}

TEST_CASE("Enriques constructor") {
  const auto s = enriques_numeric(10);
  const auto inv = derived_invariants(s);
  CHECK(inv.h2 == 10);
  CHECK(inv.hK == 0);
  CHECK(inv.K2 == 0);
  CHECK(inv.pi == 6);
  CHECK(code_of([] { enriques_numeric(6); }) == ErrorCode::InvalidDegree);
  CHECK(code_of([] { enriques_numeric(9); }) == ErrorCode::InvalidDegree);
}

TEST_CASE("cubic-curve blowups") {
  const auto s = kim_cubic(4, 9);
  const auto inv = derived_invariants(s);
  CHECK(inv.h2 == 16 - 9);
  CHECK(inv.hK == -12 + 9);
  CHECK(inv.K2 == 0);
  CHECK(code_of([] { kim_cubic(4, 10); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { kim_cubic(3, 5); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { kim_cubic(5, 1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("clifford reports") {
  const auto r49 = clifford_report(4, 9);
  CHECK(r49.deg_L == 9);
  CHECK(r49.h0_L == 3);
  CHECK(r49.cliff_L == 5);
  CHECK(r49.pencil_bound == 5);
  CHECK(r49.g == 8 * 7 / 2 - 9);
  CHECK(r49.kim_hypothesis_plausible);
  const auto r59 = clifford_report(5, 9);
  CHECK(r59.cliff_L == 14);
  CHECK(r59.pencil_bound == 8);
  CHECK_FALSE(r59.kim_hypothesis_plausible);
  const auto r62 = clifford_report(6, 2);
  CHECK(r62.cliff_L == 27);
  CHECK(r62.pencil_bound == 11);
  for (int a = 4; a <= 10; ++a)
    for (int m = 2; m <= 9; ++m) {
      const auto r = clifford_report(a, m);
      CHECK(r.cliff_L == r.deg_L - 2 * r.h0_L + 2);
      CHECK(r.deg_L == 3 * (a - 1) * (a - 3));
      CHECK(r.h0_L == (a - 1) * (a - 2) / 2);
    }
  CHECK(code_of([] { clifford_report(4, 10); }) == ErrorCode::OutOfRange);
}

TEST_CASE("builtin names") {
  CHECK(builtin("p2-3").h() == DivisorClass{3});
  CHECK(builtin("hirzebruch-e1-a2-b4").h() == DivisorClass{2, 4});
  CHECK(builtin("p1xp1-2-3").h() == DivisorClass{2, 3});
  CHECK(builtin("del-pezzo-5") == del_pezzo(5));
  CHECK(builtin("table1-row-3").name() == "table1-row-3");
  CHECK(builtin("bordiga").lattice().rank() == 11);
  CHECK(builtin("kim-4-9").h() == kim_cubic(4, 9).h());
  CHECK(code_of([] { builtin("nonsense"); }) == ErrorCode::UnknownBuiltin);
  CHECK(code_of([] { builtin("p2-x"); }) == ErrorCode::UnknownBuiltin);
  for (const auto& name : builtin_examples()) CHECK_NOTHROW(builtin(name));
}
