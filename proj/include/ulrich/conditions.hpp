#pragma once

#include <string>
#include <string_view>

#include "ulrich/invariants.hpp"

namespace ulrich {

/// Cohomological vanishings are never decided here; every report says so.
inline constexpr std::string_view kNumericalOnly = "numerical conditions only";

/// Both sides of the two numerical Ulrich equations.
///
/// The linear clause compares c1.h with (rank/2)(3h^2 + hK). The quadratic
/// clause compares c2 with (c1^2 - c1.K)/2 - rank(h^2 - chi) for bundles, and
/// D^2 with 2(h^2 - chi) + D.K for line bundles; `quadratic_term` says which.
/// A non-integral required value makes its clause false.
struct UlrichCheckReport {
  bool linear_ok = false;
  bool quadratic_ok = false;
  Rational required_linear;
  Integer actual_linear;
  Rational required_quadratic;
  Integer actual_quadratic;
  std::string quadratic_term;  // "c2" or "D^2"

  bool passed() const noexcept { return linear_ok && quadratic_ok; }
  std::string_view disclaimer() const noexcept { return kNumericalOnly; }
};

UlrichCheckReport line_numeric_check(const PolarizedSurface& s, const DivisorClass& d);

UlrichCheckReport rank_numeric_check(const PolarizedSurface& s, const ChernData& f);

/// (2, 3h + K, (5h^2 + 3hK)/2 + 2 chi). When p_g = q = 0 and h is
/// non-special the result is also checked against deg Z + 2h^2 + 2hK with
/// deg Z = N + 2; a mismatch throws InvariantViolation.
ChernData special_rank2_chern(const PolarizedSurface& s);

/// Chern data of F^dual(3h + K).
ChernData dual_twist(const PolarizedSurface& s, const ChernData& f);

/// 3h + K - D.
DivisorClass line_dual(const PolarizedSurface& s, const DivisorClass& d);

/// chi(F(-h)) = chi(F(-2h)) = 0.
bool chi_vanishing_check(const PolarizedSurface& s, const ChernData& f);

/// 3h + K.
DivisorClass special_c1(const PolarizedSurface& s);

}  // namespace ulrich
