#include <doctest.h>

#include "support.hpp"
#include "ulrich/catalog.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/document.hpp"
#include "ulrich/error.hpp"

using namespace ulrich;

namespace {

TriState wild(const PolarizedSurface& s) { return is_ulrich_wild(s).value; }
TriState stable(const PolarizedSurface& s) { return classify(s).stable_special_exists.value; }

// Abstract surface of minimal degree: U lattice, K = (-2, -2), h = (1, 1),
// h^2 = 2, hK = -4, so pi = 0.
PolarizedSurface abstract_minimal(SurfaceFlags flags) {
  auto L = make_lattice({{0, 1}, {1, 0}}, DivisorClass{-2, -2}, {"u", "v"});
  return PolarizedSurface(std::move(L), DivisorClass{1, 1}, 0, 0, kind::Abstract{}, flags);
}

}  // namespace

TEST_CASE("existence needs the standing hypotheses") {
  CHECK(special_rank2_exists(del_pezzo(4)).value == TriState::True);
  auto L = make_lattice({{0, 1}, {1, 0}}, DivisorClass{0, 0}, {"u", "v"});
  const PolarizedSurface k3_like(L, DivisorClass{1, 2}, 1, 0);
  CHECK(special_rank2_exists(k3_like).value == TriState::Unknown);
  CHECK(special_rank2_exists(abstract_minimal({})).value == TriState::Unknown);
  for (const auto& s : testing_support::catalog_surfaces())
    CHECK(special_rank2_exists(s).value != TriState::False);
}

TEST_CASE("wildness on minimal-degree surfaces follows h^2 >= 5") {
  CHECK(wild(p2_surface(1)) == TriState::False);
  CHECK(wild(p2_surface(2)) == TriState::False);
  CHECK(wild(hirzebruch_surface(0, 1, 2)) == TriState::False);
  CHECK(wild(hirzebruch_surface(0, 1, 3)) == TriState::True);
  CHECK(wild(hirzebruch_surface(2, 1, 4)) == TriState::True);
  CHECK(wild(table1()[0]) == TriState::False);  // cubic scroll, h^2 = 3
}

TEST_CASE("wildness when the sectional genus is positive") {
  for (int d = 3; d <= 9; ++d) CHECK(wild(del_pezzo(d)) == TriState::True);
  for (long long h2 : {8, 10, 12}) CHECK(wild(enriques_numeric(h2)) == TriState::True);
  const auto rows = table1();
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(wild(rows[i]) == TriState::True);
  CHECK(wild(p2_surface(3)) == TriState::True);
}

TEST_CASE("wild implies special bundles exist") {
  for (const auto& s : testing_support::catalog_surfaces())
    if (wild(s) == TriState::True) CHECK(special_rank2_exists(s).value == TriState::True);
}

TEST_CASE("stability decisions") {
  CHECK(stable(p2_surface(1)) == TriState::False);
  CHECK(stable(p2_surface(2)) == TriState::True);
  for (unsigned e = 0; e <= 4; ++e)
    for (unsigned b = e + 1; b <= e + 4; ++b) CHECK(stable(hirzebruch_surface(e, 1, b)) == TriState::False);
  for (int d = 3; d <= 9; ++d) CHECK(stable(del_pezzo(d)) == TriState::True);
  for (long long h2 : {8, 10, 12}) CHECK(stable(enriques_numeric(h2)) == TriState::True);
  CHECK(stable(kim_cubic(4, 9)) == TriState::True);
  CHECK(stable(table1()[0]) == TriState::False);
  CHECK(stable(table1()[3]) == TriState::True);
}

TEST_CASE("abstract minimal-degree surfaces stay undecided") {
  SurfaceFlags flags;
  flags.very_ample = TriState::True;
  flags.non_special = TriState::True;
  CHECK(stable(abstract_minimal(flags)) == TriState::Unknown);
  CHECK(stable(abstract_minimal({})) == TriState::Unknown);
  CHECK_THROWS_AS(stable_special_exists(abstract_minimal({})), Error);
}

TEST_CASE("moduli dimensions") {
  const auto enr = moduli_dims(enriques_numeric(10));
  CHECK(enr.lower_chern == 15);
  REQUIRE(enr.smooth);
  CHECK(*enr.smooth == 15);
  const auto bordiga = moduli_dims(builtin("bordiga"));
  CHECK(bordiga.lower_chern == 12);
  CHECK(moduli_dims(kim_cubic(4, 9)).lower_chern == 12);  // 7 - 0 + 5
  for (int d = 3; d <= 9; ++d) {
    const auto m = moduli_dims(del_pezzo(d));
    CHECK(m.lower_chern == 5);  // h^2 - K^2 + 5 with h = -K
    CHECK(m.smooth);
  }
  CHECK_THROWS_AS(moduli_dims(p2_surface(1)), Error);
}

TEST_CASE("classification report fields") {
  const auto r = classify(builtin("bordiga"));
  CHECK(r.special_rank2_exists.value == TriState::True);
  CHECK(r.ulrich_wild.value == TriState::True);
  CHECK_FALSE(r.minimal_degree);
  CHECK(r.moduli_dim_lower_chern == Integer(12));
  const auto scroll = classify(hirzebruch_surface(0, 1, 2));
  CHECK(scroll.minimal_degree);
  CHECK_FALSE(scroll.moduli_dim_lower_chern);
  CHECK_FALSE(scroll.stable_special_exists.trace.empty());
}

TEST_CASE("anticanonical degree note appears only on disagreement") {
  auto has_note = [](const ClassificationReport& r, std::string_view needle) {
    for (const auto& n : r.notes)
      if (n.find(needle) != std::string::npos) return true;
    return false;
  };
  CHECK(has_note(classify(hirzebruch_surface(0, 1, 2)), "disagrees"));
  CHECK_FALSE(has_note(classify(del_pezzo(5)), "disagrees"));
  CHECK(has_note(classify(del_pezzo(5)), "irreducible"));
}
