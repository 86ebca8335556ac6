#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

enum class TriState { False, True, Unknown };

std::string_view to_string(TriState t);
std::optional<TriState> parse_tristate(std::string_view text);

/// Cohomological hypotheses that cannot be computed from lattice data.
struct SurfaceFlags {
  TriState very_ample = TriState::Unknown;
  TriState non_special = TriState::Unknown;  // h^1(O_S(h)) = 0
  TriState h0_2K_minus_h_zero = TriState::Unknown;
  TriState h0_h_minus_K_zero = TriState::Unknown;

  friend bool operator==(const SurfaceFlags&, const SurfaceFlags&) = default;
};

namespace kind {
/// (P^2, O(lambda)).
struct P2 {
  unsigned lambda = 1;
  friend bool operator==(const P2&, const P2&) = default;
};
/// (F_e, O(a xi + b f)).
struct Hirzebruch {
  unsigned e = 0;
  unsigned a = 1;
  unsigned b = 1;
  friend bool operator==(const Hirzebruch&, const Hirzebruch&) = default;
};
/// Blow-up of P^2 at points; anticanonical when the points lie on a cubic.
struct BlowupP2 {
  bool anticanonical = false;
  friend bool operator==(const BlowupP2&, const BlowupP2&) = default;
};
struct Enriques {
  friend bool operator==(const Enriques&, const Enriques&) = default;
};
struct Abstract {
  friend bool operator==(const Abstract&, const Abstract&) = default;
};
}  // namespace kind

using SurfaceKind =
    std::variant<kind::Abstract, kind::P2, kind::Hirzebruch, kind::BlowupP2, kind::Enriques>;

/// "p2(lambda=2)", "hirzebruch(e=0,a=2,b=3)", "blowup_p2(anticanonical)", ...
std::string to_string(const SurfaceKind& k);
/// Inverse of to_string; throws ParseError.
SurfaceKind parse_kind(std::string_view text);

/// True for the kinds known to be anticanonical rational surfaces.
bool is_anticanonical_rational(const SurfaceKind& k);

/// A lattice with a polarization h, the discrete invariants p_g and q, a
/// family tag and the asserted cohomological flags.
///
/// Construction checks that h lies in the lattice, that h^2 > 0 and that the
/// kind tag is consistent with the lattice data (e.g. a hirzebruch tag
/// requires the F_e lattice with h = a xi + b f, a >= 1, b >= ae + 1).
class PolarizedSurface {
 public:
  PolarizedSurface(IntersectionLattice lattice, DivisorClass h, int pg, int q,
                   SurfaceKind kind = kind::Abstract{}, SurfaceFlags flags = {},
                   std::string name = {}, std::string provenance = {});

  const IntersectionLattice& lattice() const noexcept { return lattice_; }
  const DivisorClass& h() const noexcept { return h_; }
  const DivisorClass& canonical() const noexcept { return lattice_.canonical(); }
  int pg() const noexcept { return pg_; }
  int q() const noexcept { return q_; }
  const SurfaceKind& kind() const noexcept { return kind_; }
  /// Flags exactly as asserted.
  const SurfaceFlags& flags() const noexcept { return flags_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// Asserted flags with the unknown entries filled in from facts that hold
  /// for the whole family named by kind().
  SurfaceFlags effective_flags() const;

  bool pg_q_zero() const noexcept { return pg_ == 0 && q_ == 0; }

  friend bool operator==(const PolarizedSurface&, const PolarizedSurface&) = default;

 private:
  IntersectionLattice lattice_;
  DivisorClass h_;
  int pg_;
  int q_;
  SurfaceKind kind_;
  SurfaceFlags flags_;
  std::string name_;
  std::string provenance_;
};

/// Numeric shadow of a vector bundle.
struct ChernData {
  int rank = 1;
  DivisorClass c1;
  Integer c2 = 0;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

std::string to_string(const ChernData& f);

/// Throws ValidationError for rank < 1 and DimensionMismatch for a c1 of the
/// wrong length.
void require_chern_data(const PolarizedSurface& s, const ChernData& f);

struct DerivedInvariants {
  Integer h2;
  Integer hK;
  Integer K2;
  Integer chi;
  Integer pi;  // sectional genus
  // Present only when p_g = q = 0 and h is non-special.
  std::optional<Integer> N;
  std::optional<Integer> h0_h;
  std::optional<Integer> degZ;
  // h^0(h + K) = pi, present when p_g = q = 0 and pi >= 1.
  std::optional<Integer> h0_h_plus_K;
};

/// chi(O_S) = 1 - q + p_g.
Integer chi_structure(int pg, int q);

DerivedInvariants derived_invariants(const PolarizedSurface& s);

/// N = h^0(h) - 1 = (h^2 - hK)/2. Throws MissingHypothesis unless
/// p_g = q = 0 and h is non-special.
Integer embedding_dimension(const PolarizedSurface& s);

/// rank * chi(O_S) + c1(c1 - K)/2 - c2.
Integer riemann_roch_chi(const PolarizedSurface& s, const ChernData& f);

/// Chern data of F(t h).
ChernData chern_twist(const PolarizedSurface& s, const ChernData& f, const Integer& t);

struct SanityCheck {
  std::string clause;
  bool applicable = true;  // false when the premise of an implication fails
  bool passed = true;
};

struct SanityReport {
  std::vector<SanityCheck> checks;
  bool all_passed() const;
};

/// The inequalities forced on (h^2, hK, N) by a non-degenerate embedding
/// S in P^N with p_g = q = 0 and h non-special. Throws MissingHypothesis.
SanityReport embedding_sanity(const PolarizedSurface& s);

}  // namespace ulrich
