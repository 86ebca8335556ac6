#include "ulrich/conditions.hpp"

namespace ulrich {

namespace {

// (3h^2 + hK)/2, the degree c1.h of a rank-one Ulrich bundle.
Rational unit_degree(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  const Integer h2 = lat.square(s.h());
  const Integer hK = lat.pair(s.h(), s.canonical());
  return Rational(3 * h2 + hK, 2);
}

bool equals(const Rational& required, const Integer& actual) {
  auto n = as_integer(required);
  return n && *n == actual;
}

}  // namespace

DivisorClass special_c1(const PolarizedSurface& s) {
  return Integer(3) * s.h() + s.canonical();
}

UlrichCheckReport line_numeric_check(const PolarizedSurface& s, const DivisorClass& d) {
  const auto& lat = s.lattice();
  lat.require_member(d, "divisor");
  const Integer h2 = lat.square(s.h());
  const Integer chi = chi_structure(s.pg(), s.q());

  UlrichCheckReport r;
  r.quadratic_term = "D^2";
  r.required_linear = unit_degree(s);
  r.actual_linear = lat.pair(d, s.h());
  r.required_quadratic = Rational(2 * (h2 - chi) + lat.pair(d, s.canonical()));
  r.actual_quadratic = lat.square(d);
  r.linear_ok = equals(r.required_linear, r.actual_linear);
  r.quadratic_ok = equals(r.required_quadratic, r.actual_quadratic);
  return r;
}

UlrichCheckReport rank_numeric_check(const PolarizedSurface& s, const ChernData& f) {
  require_chern_data(s, f);
  const auto& lat = s.lattice();
  const Integer h2 = lat.square(s.h());
  const Integer chi = chi_structure(s.pg(), s.q());

  UlrichCheckReport r;
  r.quadratic_term = "c2";
  r.required_linear = Rational(f.rank) * unit_degree(s);
  r.actual_linear = lat.pair(f.c1, s.h());
  r.required_quadratic =
      Rational(lat.pair(f.c1, f.c1 - s.canonical()), 2) - Rational(f.rank * (h2 - chi));
  r.actual_quadratic = f.c2;
  r.linear_ok = equals(r.required_linear, r.actual_linear);
  r.quadratic_ok = equals(r.required_quadratic, r.actual_quadratic);
  return r;
}

ChernData special_rank2_chern(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  const Integer h2 = lat.square(s.h());
  const Integer hK = lat.pair(s.h(), s.canonical());
  const Integer chi = chi_structure(s.pg(), s.q());

  ChernData f;
  f.rank = 2;
  f.c1 = special_c1(s);
  f.c2 = exact_half(5 * h2 + 3 * hK, ErrorCode::NonIntegralC2, "(5h^2 + 3hK)/2") + 2 * chi;

  const auto inv = derived_invariants(s);
  if (inv.degZ && f.c2 != *inv.degZ + 2 * h2 + 2 * hK)
    throw Error(ErrorCode::InvariantViolation,
                "c2 = " + f.c2.str() + " differs from deg Z + 2h^2 + 2hK = " +
                    Integer(*inv.degZ + 2 * h2 + 2 * hK).str());
  return f;
}

ChernData dual_twist(const PolarizedSurface& s, const ChernData& f) {
  require_chern_data(s, f);
  const auto& lat = s.lattice();
  const DivisorClass D = special_c1(s);
  const Integer r = f.rank;
  ChernData out;
  out.rank = f.rank;
  out.c1 = r * D - f.c1;
  out.c2 = choose2(r) * lat.square(D) - (r - 1) * lat.pair(f.c1, D) + f.c2;
  return out;
}

DivisorClass line_dual(const PolarizedSurface& s, const DivisorClass& d) {
  s.lattice().require_member(d, "divisor");
  return special_c1(s) - d;
}

bool chi_vanishing_check(const PolarizedSurface& s, const ChernData& f) {
  return riemann_roch_chi(s, chern_twist(s, f, -1)) == 0 &&
         riemann_roch_chi(s, chern_twist(s, f, -2)) == 0;
}

}  // namespace ulrich
