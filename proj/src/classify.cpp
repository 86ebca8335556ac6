#include "ulrich/classify.hpp"

#include "ulrich/conditions.hpp"

namespace ulrich {

namespace {

// Collects the standing hypotheses; unknown as soon as one is not asserted.
Verdict standing_hypotheses(const PolarizedSurface& s) {
  Verdict v;
  v.value = TriState::True;
  if (!s.pg_q_zero()) {
    v.value = TriState::Unknown;
    v.trace.push_back("p_g = " + std::to_string(s.pg()) + ", q = " + std::to_string(s.q()) +
                      ": hypothesis p_g = q = 0 not met");
  } else {
    v.trace.push_back("p_g = q = 0");
  }
  const auto flags = s.effective_flags();
  auto need = [&](TriState t, std::string_view what) {
    if (t == TriState::True) {
      v.trace.push_back(std::string(what));
    } else {
      v.value = TriState::Unknown;
      v.trace.push_back(std::string(what) + " is " + std::string(to_string(t)));
    }
  };
  need(flags.very_ample, "h very ample");
  need(flags.non_special, "h non-special");
  if (s.flags().non_special == TriState::Unknown && flags.non_special == TriState::True)
    v.trace.push_back("non-speciality derived from kind " + to_string(s.kind()));
  return v;
}

struct Scroll {
  TriState is_scroll_or_plane = TriState::Unknown;  // true: no stable special bundles
  std::string reason;
};

// Decides whether a pi = 0 surface is a rational scroll or (P^2, O(1)), the
// minimal-degree cases without stable special bundles.
Scroll minimal_degree_exception(const PolarizedSurface& s, const Integer& h2) {
  if (const auto* p2 = std::get_if<kind::P2>(&s.kind())) {
    if (p2->lambda == 1) return {TriState::True, "(P^2, O(1))"};
    return {TriState::False, "Veronese surface (P^2, O(2))"};
  }
  if (std::holds_alternative<kind::Hirzebruch>(s.kind()))
    return {TriState::True, "rational scroll"};
  if (std::holds_alternative<kind::BlowupP2>(s.kind())) {
    if (s.lattice().rank() > 1) return {TriState::True, "rational scroll (blown-up P^2)"};
    if (h2 == 1) return {TriState::True, "(P^2, O(1))"};
    return {TriState::False, "Veronese surface (P^2, O(2))"};
  }
  return {TriState::Unknown,
          "pi = 0 but the kind does not tell a scroll from the Veronese surface"};
}

}  // namespace

Verdict special_rank2_exists(const PolarizedSurface& s) {
  Verdict v = standing_hypotheses(s);
  if (v.value == TriState::True)
    v.trace.push_back("special rank-2 Ulrich bundles exist for general Z of N + 2 points");
  return v;
}

Verdict stable_special_exists(const PolarizedSurface& s) {
  Verdict pre = special_rank2_exists(s);
  if (pre.value != TriState::True)
    throw Error(ErrorCode::MissingHypothesis,
                "stability needs the existence hypotheses (p_g = q = 0, h very ample and "
                "non-special)",
                "flags");
  const auto inv = derived_invariants(s);
  Verdict v;
  v.trace = std::move(pre.trace);
  if (inv.pi >= 1) {
    v.value = TriState::True;
    v.trace.push_back("pi = " + inv.pi.str() + " >= 1: not of minimal degree, stable for general Z");
    return v;
  }
  const auto exc = minimal_degree_exception(s, inv.h2);
  v.trace.push_back("pi = 0: " + exc.reason);
  switch (exc.is_scroll_or_plane) {
    case TriState::True:
      v.value = TriState::False;
      v.trace.push_back("the special bundle is never stable here");
      break;
    case TriState::False:
      v.value = TriState::True;
      v.trace.push_back("the unique rank-2 Ulrich bundle is stable (no Ulrich line bundles)");
      break;
    case TriState::Unknown:
      v.value = TriState::Unknown;
      break;
  }
  return v;
}

Verdict is_ulrich_wild(const PolarizedSurface& s) {
  Verdict v = standing_hypotheses(s);
  if (v.value != TriState::True) return v;
  const auto inv = derived_invariants(s);
  if (inv.pi >= 1) {
    v.value = TriState::True;
    v.trace.push_back("pi = " + inv.pi.str() + " >= 1");
  } else if (inv.h2 >= 5) {
    v.value = TriState::True;
    v.trace.push_back("pi = 0 and h^2 = " + inv.h2.str() + " >= 5");
  } else {
    v.value = TriState::False;
    v.trace.push_back("pi = 0 and h^2 = " + inv.h2.str() + " < 5");
  }
  return v;
}

ModuliDims moduli_dims(const PolarizedSurface& s) {
  const Verdict stable = stable_special_exists(s);
  if (stable.value != TriState::True)
    throw Error(ErrorCode::MissingHypothesis,
                "moduli dimensions need stable special bundles (verdict: " +
                    std::string(to_string(stable.value)) + ")",
                "kind");
  const auto& lat = s.lattice();
  const auto f = special_rank2_chern(s);
  const auto inv = derived_invariants(s);
  ModuliDims m;
  m.lower_chern = 4 * f.c2 - lat.square(f.c1) - 3 * inv.chi;
  if (m.lower_chern != inv.h2 - inv.K2 + 5)
    throw Error(ErrorCode::InvariantViolation,
                "4c2 - c1^2 - 3chi = " + m.lower_chern.str() + " but h^2 - K^2 + 5 = " +
                    Integer(inv.h2 - inv.K2 + 5).str());
  const auto flags = s.effective_flags();
  if (flags.h0_h_minus_K_zero == TriState::True && inv.N) m.lower_injective = 2 * (*inv.N + 2);
  if (flags.h0_2K_minus_h_zero == TriState::True) m.smooth = inv.h2 - inv.K2 + 5;
  return m;
}

ClassificationReport classify(const PolarizedSurface& s) {
  const auto inv = derived_invariants(s);
  ClassificationReport r;
  r.special_rank2_exists = special_rank2_exists(s);
  r.minimal_degree = inv.pi == 0;
  r.wild_via_lemma = inv.pi >= 1 && inv.h2 + 1 >= inv.K2;

  if (r.special_rank2_exists.value == TriState::True) {
    r.stable_special_exists = stable_special_exists(s);
  } else {
    r.stable_special_exists.value = TriState::Unknown;
    r.stable_special_exists.trace.push_back("existence hypotheses not established");
  }
  r.ulrich_wild = is_ulrich_wild(s);

  if (r.stable_special_exists.value == TriState::True) {
    const auto m = moduli_dims(s);
    r.moduli_dim_lower_chern = m.lower_chern;
    r.moduli_dim_lower_injective = m.lower_injective;
    r.moduli_dim_smooth = m.smooth;
  }

  const bool anticanonical = is_anticanonical_rational(s.kind());
  if (anticanonical && std::holds_alternative<kind::BlowupP2>(s.kind()) && inv.pi >= 1)
    r.notes.push_back("moduli of stable special bundles irreducible, rational, smooth, dim h^2 - K^2 + 5 = " +
                      Integer(inv.h2 - inv.K2 + 5).str());
  if (anticanonical && r.ulrich_wild.value != TriState::Unknown) {
    const bool by_degree = inv.h2 >= 4;
    if (by_degree != (r.ulrich_wild.value == TriState::True))
      r.notes.push_back("anticanonical degree criterion (wild iff h^2 >= 4) disagrees here; "
                        "verdict follows the sectional-genus criterion");
  }
  if (s.pg_q_zero() && inv.K2 > 9)
    r.notes.push_back("K^2 = " + inv.K2.str() +
                      " > 9 is impossible for a minimal surface with p_g = q = 0");
  if (!r.minimal_degree && inv.N && inv.N == inv.h2 + 1)
    throw Error(ErrorCode::InvariantViolation, "N = h^2 + 1 with pi != 0");
  return r;
}

}  // namespace ulrich
