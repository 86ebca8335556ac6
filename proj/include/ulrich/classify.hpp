#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulrich/invariants.hpp"

namespace ulrich {

/// A tri-state answer together with the hypotheses that produced it.
struct Verdict {
  TriState value = TriState::Unknown;
  std::vector<std::string> trace;
};

/// Existence of a special rank-2 Ulrich bundle (c1 = 3h + K). True when
/// p_g = q = 0 and h is very ample and non-special; unknown otherwise. Never
/// false: only existence is known.
Verdict special_rank2_exists(const PolarizedSurface& s);

/// Whether the special bundles built from general point sets Z are stable.
/// False for rational scrolls and (P^2, O(1)), true for every other surface
/// whose minimal-degree status can be decided. Throws MissingHypothesis
/// unless special_rank2_exists is true.
Verdict stable_special_exists(const PolarizedSurface& s);

/// Ulrich-wildness: true iff pi >= 1, or pi = 0 and h^2 >= 5. Unknown when
/// the standing hypotheses (p_g = q = 0, very ample, non-special) are not
/// all asserted.
Verdict is_ulrich_wild(const PolarizedSurface& s);

struct ModuliDims {
  Integer lower_chern;                     // 4c2 - c1^2 - 3chi = h^2 - K^2 + 5
  std::optional<Integer> lower_injective;  // 2(N + 2), when h^0(h - K) = 0
  std::optional<Integer> smooth;           // h^2 - K^2 + 5, when h^0(2K - h) = 0
};

/// Dimension statements for the component of stable special Ulrich bundles.
/// Throws MissingHypothesis unless stable_special_exists is true.
ModuliDims moduli_dims(const PolarizedSurface& s);

struct ClassificationReport {
  Verdict special_rank2_exists;
  Verdict stable_special_exists;
  Verdict ulrich_wild;
  bool wild_via_lemma = false;  // pi >= 1 and h^2 + 1 >= K^2
  std::optional<Integer> moduli_dim_lower_chern;
  std::optional<Integer> moduli_dim_lower_injective;
  std::optional<Integer> moduli_dim_smooth;
  bool minimal_degree = false;  // pi = 0
  std::vector<std::string> notes;
};

ClassificationReport classify(const PolarizedSurface& s);

}  // namespace ulrich
