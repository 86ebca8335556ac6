#include "ulrich/invariants.hpp"

#include <charconv>

namespace ulrich {

std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<TriState> parse_tristate(std::string_view text) {
  if (text == "true") return TriState::True;
  if (text == "false") return TriState::False;
  if (text == "unknown") return TriState::Unknown;
  return std::nullopt;
}

namespace {

struct KindPrinter {
  std::string operator()(const kind::Abstract&) const { return "abstract"; }
  std::string operator()(const kind::Enriques&) const { return "enriques"; }
  std::string operator()(const kind::P2& k) const {
    return "p2(lambda=" + std::to_string(k.lambda) + ")";
  }
  std::string operator()(const kind::Hirzebruch& k) const {
    return "hirzebruch(e=" + std::to_string(k.e) + ",a=" + std::to_string(k.a) +
           ",b=" + std::to_string(k.b) + ")";
  }
  std::string operator()(const kind::BlowupP2& k) const {
    return k.anticanonical ? "blowup_p2(anticanonical)" : "blowup_p2";
  }
};

[[noreturn]] void bad_kind(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::ParseError,
              "cannot parse kind '" + std::string(text) + "': " + std::string(why), "kind");
}

unsigned parse_param(std::string_view text, std::string_view item, std::string_view key) {
  const auto eq = item.find('=');
  if (eq == std::string_view::npos || item.substr(0, eq) != key)
    bad_kind(text, "expected parameter " + std::string(key));
  const auto value = item.substr(eq + 1);
  unsigned out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    bad_kind(text, "parameter " + std::string(key) + " is not a non-negative integer");
  return out;
}

std::vector<std::string_view> split_params(std::string_view args) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = args.find(',');
    out.push_back(args.substr(0, comma));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

void require_lattice(const IntersectionLattice& have, const IntersectionLattice& want,
                     std::string_view family) {
  if (have.gram() != want.gram() || !(have.canonical() == want.canonical()))
    throw Error(ErrorCode::ValidationError,
                "lattice does not match the " + std::string(family) + " lattice", "kind");
}

void validate_kind(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  if (const auto* p2 = std::get_if<kind::P2>(&s.kind())) {
    if (p2->lambda < 1)
      throw Error(ErrorCode::InvalidPolarization, "p2 kind needs lambda >= 1", "kind");
    require_lattice(lat, blowup_p2_lattice(0), "P^2");
    if (!(s.h() == DivisorClass({static_cast<long long>(p2->lambda)})))
      throw Error(ErrorCode::ValidationError, "h does not equal lambda*l", "h");
  } else if (const auto* hz = std::get_if<kind::Hirzebruch>(&s.kind())) {
    require_lattice(lat, hirzebruch_lattice(hz->e), "Hirzebruch");
    if (hz->a < 1 || hz->b < hz->a * hz->e + 1)
      throw Error(ErrorCode::InvalidPolarization,
                  "a xi + b f is very ample only for a >= 1 and b >= ae + 1", "kind");
    if (!(s.h() == DivisorClass({static_cast<long long>(hz->a), static_cast<long long>(hz->b)})))
      throw Error(ErrorCode::ValidationError, "h does not equal a xi + b f", "h");
  } else if (std::holds_alternative<kind::BlowupP2>(s.kind())) {
    require_lattice(lat, blowup_p2_lattice(static_cast<unsigned>(lat.rank() - 1)),
                    "blown-up P^2");
  } else if (std::holds_alternative<kind::Enriques>(s.kind())) {
    if (!s.pg_q_zero())
      throw Error(ErrorCode::ValidationError, "an Enriques surface has p_g = q = 0", "kind");
    for (std::size_t i = 0; i < lat.rank(); ++i)
      if (lat.pair(lat.canonical(), DivisorClass::basis(lat.rank(), i)) != 0)
        throw Error(ErrorCode::ValidationError,
                    "the canonical class of an Enriques surface is numerically trivial", "K");
  }
}

}  // namespace

std::string to_string(const SurfaceKind& k) { return std::visit(KindPrinter{}, k); }

SurfaceKind parse_kind(std::string_view text) {
  if (text == "abstract") return kind::Abstract{};
  if (text == "enriques") return kind::Enriques{};
  if (text == "blowup_p2") return kind::BlowupP2{false};
  if (text == "blowup_p2(anticanonical)") return kind::BlowupP2{true};
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') bad_kind(text, "unknown family");
  const auto family = text.substr(0, open);
  const auto params = split_params(text.substr(open + 1, text.size() - open - 2));
  if (family == "p2") {
    if (params.size() != 1) bad_kind(text, "p2 takes one parameter");
    return kind::P2{parse_param(text, params[0], "lambda")};
  }
  if (family == "hirzebruch") {
    if (params.size() != 3) bad_kind(text, "hirzebruch takes e, a, b");
    return kind::Hirzebruch{parse_param(text, params[0], "e"), parse_param(text, params[1], "a"),
                            parse_param(text, params[2], "b")};
  }
  bad_kind(text, "unknown family");
}

bool is_anticanonical_rational(const SurfaceKind& k) {
  if (std::holds_alternative<kind::P2>(k) || std::holds_alternative<kind::Hirzebruch>(k))
    return true;
  if (const auto* b = std::get_if<kind::BlowupP2>(&k)) return b->anticanonical;
  return false;
}

PolarizedSurface::PolarizedSurface(IntersectionLattice lattice, DivisorClass h, int pg, int q,
                                   SurfaceKind kind, SurfaceFlags flags, std::string name,
                                   std::string provenance)
    : lattice_(std::move(lattice)),
      h_(std::move(h)),
      pg_(pg),
      q_(q),
      kind_(std::move(kind)),
      flags_(flags),
      name_(std::move(name)),
      provenance_(std::move(provenance)) {
  if (h_.size() != lattice_.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "h has " + std::to_string(h_.size()) + " coefficients, lattice rank is " +
                    std::to_string(lattice_.rank()),
                "h");
  if (pg_ < 0) throw Error(ErrorCode::ValidationError, "p_g must be non-negative", "pg");
  if (q_ < 0) throw Error(ErrorCode::ValidationError, "q must be non-negative", "q");
  if (lattice_.square(h_) <= 0)
    throw Error(ErrorCode::InvalidPolarization,
                "h^2 = " + lattice_.square(h_).str() + " but a very ample class has h^2 > 0", "h");
  validate_kind(*this);
}

SurfaceFlags PolarizedSurface::effective_flags() const {
  SurfaceFlags derived;
  const bool anticanonical = is_anticanonical_rational(kind_);
  if (std::holds_alternative<kind::P2>(kind_) || std::holds_alternative<kind::Hirzebruch>(kind_))
    derived.very_ample = TriState::True;  // parameters were range-checked on construction
  if (anticanonical || std::holds_alternative<kind::Enriques>(kind_)) {
    derived.non_special = TriState::True;
    // h - K is effective and non-zero (h + an anticanonical curve, or h - K
    // ample with 2K = 0), so h^0(h - K) != 0 and h^0(2K - h) = 0.
    derived.h0_2K_minus_h_zero = TriState::True;
    derived.h0_h_minus_K_zero = TriState::False;
  }
  if (std::holds_alternative<kind::BlowupP2>(kind_)) {
    // l is nef, so a class D with D.l < 0 has no sections.
    const auto l = DivisorClass::basis(lattice_.rank(), 0);
    const auto two_k_minus_h = Integer(2) * canonical() - h_;
    if (lattice_.pair(two_k_minus_h, l) < 0) derived.h0_2K_minus_h_zero = TriState::True;
  }
  auto fill = [](TriState asserted, TriState fallback) {
    return asserted == TriState::Unknown ? fallback : asserted;
  };
  return SurfaceFlags{fill(flags_.very_ample, derived.very_ample),
                      fill(flags_.non_special, derived.non_special),
                      fill(flags_.h0_2K_minus_h_zero, derived.h0_2K_minus_h_zero),
                      fill(flags_.h0_h_minus_K_zero, derived.h0_h_minus_K_zero)};
}

std::string to_string(const ChernData& f) {
  return "(rank " + std::to_string(f.rank) + ", c1 " + to_string(f.c1) + ", c2 " + f.c2.str() +
         ")";
}

Integer chi_structure(int pg, int q) { return Integer(1) - q + pg; }

DerivedInvariants derived_invariants(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  const auto& K = s.canonical();
  DerivedInvariants d;
  d.h2 = lat.square(s.h());
  d.hK = lat.pair(s.h(), K);
  d.K2 = lat.square(K);
  d.chi = chi_structure(s.pg(), s.q());
  d.pi = exact_half(d.h2 + d.hK, ErrorCode::NonIntegralGenus, "sectional genus (h^2 + hK)/2") + 1;
  if (s.pg_q_zero() && s.effective_flags().non_special == TriState::True) {
    d.N = exact_half(d.h2 - d.hK, ErrorCode::NonIntegralGenus, "N = (h^2 - hK)/2");
    d.h0_h = *d.N + 1;
    d.degZ = *d.N + 2;
  }
  if (s.pg_q_zero() && d.pi >= 1) d.h0_h_plus_K = d.pi;
  return d;
}

Integer embedding_dimension(const PolarizedSurface& s) {
  auto d = derived_invariants(s);
  if (!d.N)
    throw Error(ErrorCode::MissingHypothesis,
                "N = h^0(h) - 1 needs p_g = q = 0 and a non-special h",
                s.pg_q_zero() ? "flags.non_special" : "pg");
  return *d.N;
}

void require_chern_data(const PolarizedSurface& s, const ChernData& f) {
  if (f.rank < 1) throw Error(ErrorCode::ValidationError, "rank must be positive", "rank");
  s.lattice().require_member(f.c1, "c1");
}

Integer riemann_roch_chi(const PolarizedSurface& s, const ChernData& f) {
  require_chern_data(s, f);
  const auto& lat = s.lattice();
  const Integer c1c1_minus_K = lat.pair(f.c1, f.c1 - s.canonical());
  return Integer(f.rank) * chi_structure(s.pg(), s.q()) +
         exact_half(c1c1_minus_K, ErrorCode::NonIntegralChi, "c1(c1 - K)/2") - f.c2;
}

ChernData chern_twist(const PolarizedSurface& s, const ChernData& f, const Integer& t) {
  require_chern_data(s, f);
  const auto& lat = s.lattice();
  const Integer r = f.rank;
  ChernData out;
  out.rank = f.rank;
  out.c1 = f.c1 + (r * t) * s.h();
  out.c2 = f.c2 + (r - 1) * t * lat.pair(f.c1, s.h()) + choose2(r) * t * t * lat.square(s.h());
  return out;
}

bool SanityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

SanityReport embedding_sanity(const PolarizedSurface& s) {
  const auto d = derived_invariants(s);
  if (!d.N)
    throw Error(ErrorCode::MissingHypothesis,
                "embedding checks need p_g = q = 0 and a non-special h",
                s.pg_q_zero() ? "flags.non_special" : "pg");
  const Integer& N = *d.N;
  SanityReport r;
  auto add = [&](std::string clause, bool premise, bool conclusion) {
    r.checks.push_back({std::move(clause), premise, !premise || conclusion});
  };
  add("h^2 = hK + 2N", true, d.h2 == d.hK + 2 * N);
  add("h^2 >= hK + 4", true, d.h2 >= d.hK + 4);
  add("h^2 >= 2 => N >= 3", d.h2 >= 2, N >= 3);
  add("h^2 >= 2 => h^2 >= hK + 6", d.h2 >= 2, d.h2 >= d.hK + 6);
  add("h^2 >= 4 => N >= 4", d.h2 >= 4, N >= 4);
  add("h^2 >= 4 => h^2 >= hK + 8", d.h2 >= 4, d.h2 >= d.hK + 8);
  return r;
}

}  // namespace ulrich
