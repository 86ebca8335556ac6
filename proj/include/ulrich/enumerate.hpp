#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ulrich/invariants.hpp"

namespace ulrich {

/// Every integral D with D.h = (3h^2 + hK)/2 and D^2 = 2(h^2 - chi) + D.K on
/// a lattice of rank <= 2, sorted lexicographically.
///
/// The linear equation is solved over the integers (extended gcd gives a
/// particular solution and a primitive direction), the quadratic is then a
/// univariate quadratic in the line parameter whose integer roots are kept.
/// Throws RankTooHigh for rank > 2, DegenerateForm if D -> D.h vanishes, and
/// UnboundedSolutions if the whole solution line satisfies the quadratic.
std::vector<DivisorClass> enumerate_rank2_exact(const PolarizedSurface& s);

/// The two Ulrich line classes (L, M) on P^1 x P^1 polarized by a xi + b f:
/// L = (a-1) xi + (2b-1) f, M = (2a-1) xi + (b-1) f.
std::pair<DivisorClass, DivisorClass> p1xp1_closed_form(long long a, long long b);

inline constexpr std::uint64_t kDefaultIterationCeiling = 100'000'000;

/// Exhaustive search of the box [-bound, bound]^rank. One coordinate with a
/// non-zero coefficient in the linear form is solved for exactly, so only
/// (2 bound + 1)^(rank - 1) points are visited; BoxTooLarge is thrown when
/// that exceeds `ceiling`.
std::vector<DivisorClass> enumerate_bounded(const PolarizedSurface& s, long long bound,
                                            std::uint64_t ceiling = kDefaultIterationCeiling);

}  // namespace ulrich
