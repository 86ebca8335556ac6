#include <doctest.h>

#include "support.hpp"
#include "ulrich/catalog.hpp"
#include "ulrich/conditions.hpp"
#include "ulrich/enumerate.hpp"
#include "ulrich/error.hpp"

using namespace ulrich;

TEST_CASE("line check on the plane") {
  const auto s1 = p2_surface(1);
  CHECK(line_numeric_check(s1, DivisorClass{0}).passed());
  CHECK_FALSE(line_numeric_check(s1, DivisorClass{1}).passed());
  const auto s2 = p2_surface(2);
  for (long long k = -6; k <= 6; ++k) CHECK_FALSE(line_numeric_check(s2, DivisorClass{k}).passed());
  const auto r = line_numeric_check(s2, DivisorClass{1});
  CHECK(r.required_linear == Rational(3));  // (3*4 - 6)/2
  CHECK(r.actual_linear == 2);
  CHECK(r.quadratic_term == "D^2");
  CHECK(r.disclaimer() == kNumericalOnly);
}

TEST_CASE("line check on the quadric surface matches the closed form") {
  for (long long a = 1; a <= 6; ++a)
    for (long long b = a; b <= 6; ++b) {
      const auto s = hirzebruch_surface(0, a, b);
      const auto [d1, d2] = p1xp1_closed_form(a, b);
      CHECK(line_numeric_check(s, d1).passed());
      CHECK(line_numeric_check(s, d2).passed());
    }
}

TEST_CASE("rank check reports fractional requirements") {
  // rank 1 on the plane with lambda = 2: required c1.h = (3*4 - 6)/2 = 3.
  const auto s = p2_surface(2);
  const auto r = rank_numeric_check(s, {1, DivisorClass{1}, 0});
  CHECK(r.required_linear == Rational(3));
  CHECK(r.quadratic_term == "c2");
  CHECK_FALSE(r.linear_ok);
}

TEST_CASE("special rank two chern classes") {
  for (int d = 3; d <= 9; ++d) {
    const auto s = del_pezzo(d);
    const auto f = special_rank2_chern(s);
    CHECK(f.rank == 2);
    CHECK(f.c1 == special_c1(s));
    CHECK(f.c2 == d + 2);
  }
  CHECK(special_rank2_chern(enriques_numeric(10)).c2 == 27);
  CHECK(special_rank2_chern(builtin("bordiga")).c2 == 14);
}

TEST_CASE("special chern data is ulrich and self-dual") {
  for (const auto& s : testing_support::catalog_surfaces()) {
    if (!s.pg_q_zero()) continue;
    CAPTURE(s.name());
    const auto f = special_rank2_chern(s);
    CHECK(rank_numeric_check(s, f).passed());
    CHECK(chi_vanishing_check(s, f));
    CHECK(dual_twist(s, f) == f);
  }
}

TEST_CASE("rank check is equivalent to vanishing of chi(F(-1)), chi(F(-2))") {
  for (const auto& inst : testing_support::random_instances(1000, 21)) {
    CHECK(rank_numeric_check(*inst.surface, inst.data).passed() ==
          chi_vanishing_check(*inst.surface, inst.data));
  }
}

TEST_CASE("rank check and vanishing agree on constructed ulrich data") {
  // Random data rarely passes, so also test on twists of known solutions.
  for (const auto& s : testing_support::catalog_surfaces()) {
    if (!s.pg_q_zero()) continue;
    const auto f = special_rank2_chern(s);
    for (long long t = -2; t <= 2; ++t) {
      const auto g = chern_twist(s, f, t);
      CHECK(rank_numeric_check(s, g).passed() == (t == 0));
      CHECK(chi_vanishing_check(s, g) == (t == 0));
    }
  }
}

TEST_CASE("dual twist is an involution") {
  for (const auto& inst : testing_support::random_instances(1000, 22))
    CHECK(dual_twist(*inst.surface, dual_twist(*inst.surface, inst.data)) == inst.data);
}

TEST_CASE("dual twist preserves the ulrich conditions") {
  for (const auto& inst : testing_support::random_instances(500, 23)) {
    const auto& s = *inst.surface;
    CHECK(rank_numeric_check(s, inst.data).passed() ==
          rank_numeric_check(s, dual_twist(s, inst.data)).passed());
  }
}

TEST_CASE("line dual maps solutions to solutions") {
  for (const auto& s : testing_support::catalog_surfaces()) {
    if (s.lattice().rank() > 2) continue;
    for (const auto& d : enumerate_rank2_exact(s)) {
      CHECK(line_numeric_check(s, line_dual(s, d)).passed());
      CHECK(line_dual(s, line_dual(s, d)) == d);
    }
  }
}
