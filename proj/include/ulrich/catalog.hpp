#pragma once

#include <string>
#include <vector>

#include "ulrich/invariants.hpp"

namespace ulrich {

/// (P^2, O(lambda)), lambda >= 1.
PolarizedSurface p2_surface(unsigned lambda);

/// (F_e, a xi + b f); requires a >= 1 and b >= ae + 1 (InvalidPolarization).
PolarizedSurface hirzebruch_surface(unsigned e, unsigned a, unsigned b);

/// Blow-up of P^2 at 9 - d general points, anticanonically embedded;
/// 3 <= d <= 9 (InvalidDegree).
PolarizedSurface del_pezzo(int d);

/// Numeric carrier for an Enriques surface with h^2 = h2: the hyperbolic
/// plane with K = 0 and h = u + (h2/2) v, so h^2 = h2, hK = K^2 = 0.
/// Requires h2 even and >= 8 (InvalidDegree).
PolarizedSurface enriques_numeric(long long h2);

/// P^2 blown up at m general points of a cubic, h = a l - sum e_i;
/// requires a >= 4 and 2 <= m <= 9 (OutOfRange).
PolarizedSurface kim_cubic(int a, int m);

/// Linearly normal non-degenerate non-special rational surfaces in P^4.
/// Row 2 is 3l - (e1 + ... + e5) on five points.
std::vector<PolarizedSurface> table1();

/// Row 2 exactly as it is usually printed, 3l - (e1 + ... + e4) on five
/// points. Kept as a regression fixture: it is not linearly normal in P^4.
PolarizedSurface table1_printed_row2();

struct Table1Expectation {
  long long degree;  // h^2
  long long hK;
  long long K2;
  long long N;
};

/// Expected columns for the seven rows, in order.
const std::vector<Table1Expectation>& table1_expectations();

struct Table1RowCheck {
  std::string name;
  Table1Expectation expected;
  Table1Expectation actual;
  bool passed() const;
  /// "N: expected 4, got 5; ..." or empty.
  std::string diff() const;
};

struct Table1Report {
  std::vector<Table1RowCheck> rows;
  bool passed() const;
};

/// Compares each surface with the expectation of the same index.
Table1Report verify_table1(const std::vector<PolarizedSurface>& rows,
                           const std::vector<Table1Expectation>& expected);

/// verify_table1(table1(), table1_expectations()); throws VerificationFailure
/// listing the per-row differences when any row fails.
Table1Report verify_table1();

/// Clifford-index bookkeeping on a curve C in |3h + K| of kim_cubic(a, m).
struct CliffordReport {
  int a = 0;
  int m = 0;
  Integer pi;
  Integer g;             // genus of C
  Integer deg_L;         // (h + K).C
  Integer h0_L;          // h^0((a - 3) l)
  Integer cliff_L;       // deg_L - 2 h0_L + 2
  Integer pencil_bound;  // 3a - 7, from the g^1_{3a-5} of lines through a blown-up point
  bool kim_hypothesis_plausible = false;  // cliff_L <= pencil_bound
};

CliffordReport clifford_report(int a, int m);

/// Resolves a builtin name such as "p2-2", "hirzebruch-e2-a1-b3",
/// "p1xp1-2-3", "del-pezzo-3", "enriques-10", "kim-5-9", "table1-row-4",
/// "table1-row-2-printed" or "bordiga". Throws UnknownBuiltin.
PolarizedSurface builtin(std::string_view name);

struct BuiltinEntry {
  std::string pattern;
  std::string description;
};

/// Name patterns accepted by builtin().
std::vector<BuiltinEntry> builtin_catalog();

/// Representative concrete names (every fixed builtin plus a sample of each
/// parametric family).
std::vector<std::string> builtin_examples();

}  // namespace ulrich
