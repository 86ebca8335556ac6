#include "ulrich/catalog.hpp"

#include <charconv>
#include <sstream>

namespace ulrich {

namespace {

constexpr SurfaceFlags kVeryAmpleNonSpecial{TriState::True, TriState::True, TriState::Unknown,
                                            TriState::Unknown};

// a l - sum_i mult_i x_i on the blow-up with the given exceptional labels.
DivisorClass plane_class(long long degree, const std::vector<long long>& multiplicities) {
  std::vector<Integer> c{Integer(degree)};
  for (long long m : multiplicities) c.emplace_back(-m);
  return DivisorClass(std::move(c));
}

std::vector<std::string> numbered(std::string_view prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

struct Table1Spec {
  std::string points;
  int nf;            // points Q_i, exceptional classes f_i
  int ne;            // points P_j, exceptional classes e_j
  long long degree;  // coefficient of l
  long long f_mult;
  long long e_mult;
  int e_used;  // e_j with j > e_used have multiplicity 0
  bool anticanonical;
};

PolarizedSurface build_table1_row(const Table1Spec& t, std::string name) {
  auto labels = numbered("f", t.nf);
  for (auto& e : numbered("e", t.ne)) labels.push_back(std::move(e));
  auto lattice = blowup_p2_lattice(std::move(labels));
  std::vector<long long> mult;
  for (int i = 0; i < t.nf; ++i) mult.push_back(t.f_mult);
  for (int j = 0; j < t.ne; ++j) mult.push_back(j < t.e_used ? t.e_mult : 0);
  return PolarizedSurface(std::move(lattice), plane_class(t.degree, mult), 0, 0,
                          kind::BlowupP2{t.anticanonical}, kVeryAmpleNonSpecial, std::move(name),
                          "linearly normal non-special rational surface in P^4, X = " + t.points);
}

// Surfaces of degree <= 5 in P^4 (the first three rows) are anticanonical.
const std::vector<Table1Spec>& table1_specs() {
  static const std::vector<Table1Spec> specs{
      {"{P1}", 0, 1, 2, 0, 1, 1, true},
      {"{P1..P5}", 0, 5, 3, 0, 1, 5, true},
      {"{Q1, P1..P7}", 1, 7, 4, 2, 1, 7, true},
      {"{P1..P10}", 0, 10, 4, 0, 1, 10, false},
      {"{Q1..Q6, P1..P5}", 6, 5, 6, 2, 1, 5, false},
      {"{Q1..Q10, P1}", 10, 1, 7, 2, 1, 1, false},
      {"{Q1..Q10}", 10, 0, 13, 4, 0, 0, false},
  };
  return specs;
}

std::optional<long long> to_number(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_dash(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto d = s.find('-');
    out.push_back(s.substr(0, d));
    if (d == std::string_view::npos) break;
    s.remove_prefix(d + 1);
  }
  return out;
}

// "e2" with prefix "e" -> 2.
std::optional<long long> prefixed(std::string_view token, char prefix) {
  if (token.empty() || token.front() != prefix) return std::nullopt;
  return to_number(token.substr(1));
}

unsigned as_unsigned(long long v, std::string_view name) {
  if (v < 0)
    throw Error(ErrorCode::UnknownBuiltin, "negative parameter in builtin " + std::string(name));
  return static_cast<unsigned>(v);
}

PolarizedSurface named(PolarizedSurface s, std::string name) {
  return PolarizedSurface(s.lattice(), s.h(), s.pg(), s.q(), s.kind(), s.flags(), std::move(name),
                          s.provenance());
}

}  // namespace

PolarizedSurface p2_surface(unsigned lambda) {
  if (lambda < 1) throw Error(ErrorCode::InvalidPolarization, "lambda must be at least 1");
  return PolarizedSurface(blowup_p2_lattice(0), DivisorClass{static_cast<long long>(lambda)}, 0, 0,
                          kind::P2{lambda}, kVeryAmpleNonSpecial,
                          "p2-" + std::to_string(lambda), "(P^2, O(lambda))");
}

PolarizedSurface hirzebruch_surface(unsigned e, unsigned a, unsigned b) {
  if (a < 1 || b < a * e + 1)
    throw Error(ErrorCode::InvalidPolarization,
                "a xi + b f on F_" + std::to_string(e) + " needs a >= 1 and b >= ae + 1");
  return PolarizedSurface(hirzebruch_lattice(e),
                          DivisorClass{static_cast<long long>(a), static_cast<long long>(b)}, 0, 0,
                          kind::Hirzebruch{e, a, b}, kVeryAmpleNonSpecial,
                          "hirzebruch-e" + std::to_string(e) + "-a" + std::to_string(a) + "-b" +
                              std::to_string(b),
                          "Hirzebruch surface F_e polarized by a xi + b f");
}

PolarizedSurface del_pezzo(int d) {
  if (d < 3 || d > 9)
    throw Error(ErrorCode::InvalidDegree,
                "del Pezzo degree must lie in [3, 9]; got " + std::to_string(d));
  auto lattice = blowup_p2_lattice(static_cast<unsigned>(9 - d));
  DivisorClass h = -lattice.canonical();
  return PolarizedSurface(std::move(lattice), std::move(h), 0, 0, kind::BlowupP2{true},
                          kVeryAmpleNonSpecial, "del-pezzo-" + std::to_string(d),
                          "del Pezzo surface of degree d, anticanonical embedding");
}

PolarizedSurface enriques_numeric(long long h2) {
  if (h2 < 8 || h2 % 2 != 0)
    throw Error(ErrorCode::InvalidDegree,
                "an Enriques polarization has even h^2 >= 8; got " + std::to_string(h2));
  auto lattice = make_lattice({{0, 1}, {1, 0}}, DivisorClass{0, 0}, {"u", "v"});
  return PolarizedSurface(std::move(lattice), DivisorClass{1, h2 / 2}, 0, 0, kind::Enriques{},
                          SurfaceFlags{TriState::True, TriState::True, TriState::True,
                                       TriState::Unknown},
                          "enriques-" + std::to_string(h2),
                          "numeric carrier of an Enriques surface (h^2, hK = 0, K^2 = 0)");
}

PolarizedSurface kim_cubic(int a, int m) {
  if (a < 4 || m < 2 || m > 9)
    throw Error(ErrorCode::OutOfRange, "kim_cubic needs a >= 4 and 2 <= m <= 9; got a = " +
                                           std::to_string(a) + ", m = " + std::to_string(m));
  auto lattice = blowup_p2_lattice(static_cast<unsigned>(m));
  return PolarizedSurface(std::move(lattice), plane_class(a, std::vector<long long>(m, 1)), 0, 0,
                          kind::BlowupP2{true}, kVeryAmpleNonSpecial,
                          "kim-" + std::to_string(a) + "-" + std::to_string(m),
                          "P^2 blown up at m general points of a cubic, h = a l - sum e_i");
}

std::vector<PolarizedSurface> table1() {
  std::vector<PolarizedSurface> rows;
  int index = 1;
  for (const auto& spec : table1_specs())
    rows.push_back(build_table1_row(spec, "table1-row-" + std::to_string(index++)));
  return rows;
}

PolarizedSurface table1_printed_row2() {
  return build_table1_row({"{P1..P5}", 0, 5, 3, 0, 1, 4, true}, "table1-row-2-printed");
}

const std::vector<Table1Expectation>& table1_expectations() {
  static const std::vector<Table1Expectation> rows{
      {3, -5, 8, 4}, {4, -4, 4, 4}, {5, -3, 1, 4}, {6, -2, -1, 4},
      {7, -1, -2, 4}, {8, 0, -2, 4}, {9, 1, -1, 4},
  };
  return rows;
}

bool Table1RowCheck::passed() const { return diff().empty(); }

std::string Table1RowCheck::diff() const {
  std::ostringstream os;
  auto cmp = [&](const char* what, long long want, long long got) {
    if (want == got) return;
    if (os.tellp() > 0) os << "; ";
    os << what << ": expected " << want << ", got " << got;
  };
  cmp("h^2", expected.degree, actual.degree);
  cmp("hK", expected.hK, actual.hK);
  cmp("K^2", expected.K2, actual.K2);
  cmp("N", expected.N, actual.N);
  return os.str();
}

bool Table1Report::passed() const {
  for (const auto& r : rows)
    if (!r.passed()) return false;
  return true;
}

Table1Report verify_table1(const std::vector<PolarizedSurface>& rows,
                           const std::vector<Table1Expectation>& expected) {
  if (rows.size() != expected.size())
    throw Error(ErrorCode::DimensionMismatch, "row count differs from expectation count");
  Table1Report report;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto inv = derived_invariants(rows[i]);
    const Integer N = embedding_dimension(rows[i]);
    report.rows.push_back({rows[i].name(), expected[i],
                           {inv.h2.convert_to<long long>(), inv.hK.convert_to<long long>(),
                            inv.K2.convert_to<long long>(), N.convert_to<long long>()}});
  }
  return report;
}

Table1Report verify_table1() {
  auto report = verify_table1(table1(), table1_expectations());
  if (!report.passed()) {
    std::string msg = "Table 1 verification failed";
    for (const auto& r : report.rows)
      if (!r.passed()) msg += "; " + r.name + ": " + r.diff();
    throw Error(ErrorCode::VerificationFailure, msg);
  }
  return report;
}

CliffordReport clifford_report(int a, int m) {
  const auto s = kim_cubic(a, m);  // range check
  const auto& lat = s.lattice();
  const auto& K = s.canonical();
  const DivisorClass curve = Integer(3) * s.h() + K;
  const DivisorClass adjoint = s.h() + K;
  if (!(adjoint == plane_class(a - 3, std::vector<long long>(m, 0))))
    throw Error(ErrorCode::InvariantViolation, "h + K is not (a - 3) l");

  CliffordReport r;
  r.a = a;
  r.m = m;
  r.pi = derived_invariants(s).pi;
  r.g = exact_half(lat.square(curve) + lat.pair(curve, K), ErrorCode::NonIntegralGenus,
                   "genus of C") + 1;
  r.deg_L = lat.pair(adjoint, curve);
  // h^0(S, (a-3) l) = h^0(P^2, O(a-3)).
  r.h0_L = choose2(Integer(a - 1));
  r.cliff_L = r.deg_L - 2 * r.h0_L + 2;
  r.pencil_bound = Integer(3 * a - 7);
  r.kim_hypothesis_plausible = r.cliff_L <= r.pencil_bound;
  return r;
}

PolarizedSurface builtin(std::string_view name) {
  auto unknown = [&]() -> Error {
    return Error(ErrorCode::UnknownBuiltin,
                 "unknown builtin surface '" + std::string(name) + "' (see `catalog list`)",
                 "builtin");
  };
  if (name == "bordiga") return named(table1().at(3), "bordiga");
  if (name == "table1-row-2-printed") return table1_printed_row2();

  const auto t = split_dash(name);
  if (t.size() == 2 && t[0] == "p2") {
    if (auto l = to_number(t[1]); l && *l >= 1) return p2_surface(as_unsigned(*l, name));
  } else if (t.size() == 4 && t[0] == "hirzebruch") {
    auto e = prefixed(t[1], 'e'), a = prefixed(t[2], 'a'), b = prefixed(t[3], 'b');
    if (e && a && b)
      return hirzebruch_surface(as_unsigned(*e, name), as_unsigned(*a, name),
                                as_unsigned(*b, name));
  } else if (t.size() == 3 && t[0] == "p1xp1") {
    auto a = to_number(t[1]), b = to_number(t[2]);
    if (a && b) {
      auto s = hirzebruch_surface(0, as_unsigned(*a, name), as_unsigned(*b, name));
      return named(std::move(s), std::string(name));
    }
  } else if (t.size() == 3 && t[0] == "del" && t[1] == "pezzo") {
    if (auto d = to_number(t[2])) return del_pezzo(static_cast<int>(*d));
  } else if (t.size() == 2 && t[0] == "enriques") {
    if (auto h2 = to_number(t[1])) return enriques_numeric(*h2);
  } else if (t.size() == 3 && t[0] == "kim") {
    auto a = to_number(t[1]), m = to_number(t[2]);
    if (a && m) return kim_cubic(static_cast<int>(*a), static_cast<int>(*m));
  } else if (t.size() == 3 && t[0] == "table1" && t[1] == "row") {
    if (auto r = to_number(t[2]); r && *r >= 1 && *r <= 7)
      return table1().at(static_cast<std::size_t>(*r - 1));
  }
  throw unknown();
}

std::vector<BuiltinEntry> builtin_catalog() {
  return {
      {"p2-L", "(P^2, O(L)), L >= 1"},
      {"hirzebruch-eE-aA-bB", "F_E polarized by A xi + B f, A >= 1, B >= AE + 1"},
      {"p1xp1-A-B", "P^1 x P^1 polarized by A xi + B f"},
      {"del-pezzo-D", "del Pezzo surface of degree D in [3, 9], h = -K"},
      {"enriques-H", "Enriques surface with h^2 = H (even, >= 8)"},
      {"kim-A-M", "P^2 blown up at M in [2, 9] points on a cubic, h = A l - sum e_i, A >= 4"},
      {"table1-row-R", "row R in [1, 7] of the linearly normal rational surfaces in P^4"},
      {"table1-row-2-printed", "row 2 with h = 3l - (e1 + .. + e4); fails N = 4"},
      {"bordiga", "alias of table1-row-4"},
  };
}

std::vector<std::string> builtin_examples() {
  std::vector<std::string> out{"p2-1", "p2-2", "p2-3",
                               "hirzebruch-e0-a1-b2", "hirzebruch-e0-a1-b3",
                               "hirzebruch-e2-a1-b3", "hirzebruch-e2-a1-b4",
                               "p1xp1-1-1", "p1xp1-2-3"};
  for (int d = 3; d <= 9; ++d) out.push_back("del-pezzo-" + std::to_string(d));
  for (int h2 : {8, 10, 12}) out.push_back("enriques-" + std::to_string(h2));
  for (const char* k : {"kim-4-9", "kim-5-2", "kim-5-9"}) out.emplace_back(k);
  for (int r = 1; r <= 7; ++r) out.push_back("table1-row-" + std::to_string(r));
  out.emplace_back("table1-row-2-printed");
  out.emplace_back("bordiga");
  return out;
}

}  // namespace ulrich
