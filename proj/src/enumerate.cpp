#include "ulrich/enumerate.hpp"

#include <algorithm>

#include "ulrich/conditions.hpp"

namespace ulrich {

namespace {

struct Bezout {
  Integer g;
  Integer x;
  Integer y;
};

// g = gcd(a, b) >= 0 with a x + b y = g.
Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {Integer(-old_r), Integer(-old_s), Integer(-old_t)};
  return {old_r, old_s, old_t};
}

// Integer roots of a t^2 + b t + c = 0, ascending.
std::vector<Integer> integer_roots(const Integer& a, const Integer& b, const Integer& c) {
  std::vector<Integer> roots;
  if (a == 0) {
    if (b == 0) {
      if (c == 0)
        throw Error(ErrorCode::UnboundedSolutions,
                    "every point of the linear solution line satisfies the quadratic equation");
      return roots;
    }
    if (c % b == 0) roots.push_back(-c / b);
    return roots;
  }
  const Integer disc = b * b - 4 * a * c;
  const auto root = exact_sqrt(disc);
  if (!root) return roots;
  for (const Integer num : {Integer(-b - *root), Integer(-b + *root)}) {
    if (num % (2 * a) == 0) roots.push_back(num / (2 * a));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<DivisorClass> enumerate_rank2_exact(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  if (lat.rank() > 2)
    throw Error(ErrorCode::RankTooHigh, "exact enumeration needs a lattice of rank <= 2; got rank " +
                                            std::to_string(lat.rank()));
  const DivisorClass w = lat.linear_form(s.h());
  if (std::all_of(w.begin(), w.end(), [](const Integer& c) { return c == 0; }))
    throw Error(ErrorCode::DegenerateForm, "the form D -> D.h is identically zero", "h");

  const Integer h2 = lat.square(s.h());
  const Integer hK = lat.pair(s.h(), s.canonical());
  const Integer chi = chi_structure(s.pg(), s.q());
  const auto rhs = half_if_even(3 * h2 + hK);
  if (!rhs) return {};

  // Solution line D = P + t dir of w . D = rhs.
  DivisorClass P;
  DivisorClass dir;
  if (lat.rank() == 1) {
    if (*rhs % w[0] != 0) return {};
    P = DivisorClass(std::vector<Integer>{*rhs / w[0]});
    dir = DivisorClass::zero(1);
  } else {
    const auto bz = extended_gcd(w[0], w[1]);
    if (*rhs % bz.g != 0) return {};
    const Integer k = *rhs / bz.g;
    P = DivisorClass(std::vector<Integer>{bz.x * k, bz.y * k});
    dir = DivisorClass(std::vector<Integer>{w[1] / bz.g, -w[0] / bz.g});
  }

  // D^2 - D.K - 2(h^2 - chi) along the line.
  const DivisorClass& K = s.canonical();
  const Integer qa = lat.square(dir);
  const Integer qb = 2 * lat.pair(P, dir) - lat.pair(dir, K);
  const Integer qc = lat.square(P) - lat.pair(P, K) - 2 * (h2 - chi);

  std::vector<DivisorClass> out;
  if (lat.rank() == 1) {
    if (qc == 0) out.push_back(P);
    return out;
  }
  for (const Integer& t : integer_roots(qa, qb, qc)) out.push_back(P + t * dir);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<DivisorClass, DivisorClass> p1xp1_closed_form(long long a, long long b) {
  if (a < 1 || b < 1)
    throw Error(ErrorCode::InvalidPolarization,
                "P^1 x P^1 polarization needs a, b >= 1; got (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  return {DivisorClass{a - 1, 2 * b - 1}, DivisorClass{2 * a - 1, b - 1}};
}

std::vector<DivisorClass> enumerate_bounded(const PolarizedSurface& s, long long bound,
                                            std::uint64_t ceiling) {
  if (bound < 1) throw Error(ErrorCode::OutOfRange, "bound must be at least 1", "bound");
  const auto& lat = s.lattice();
  const std::size_t n = lat.rank();
  const DivisorClass w = lat.linear_form(s.h());

  // Solve for the last coordinate with a non-zero coefficient.
  std::size_t pivot = n;
  for (std::size_t i = n; i-- > 0;)
    if (w[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == n) throw Error(ErrorCode::DegenerateForm, "the form D -> D.h is identically zero", "h");

  const std::uint64_t side = 2 * static_cast<std::uint64_t>(bound) + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (count > ceiling / side) {
      count = ceiling + 1;
      break;
    }
    count *= side;
  }
  if (count > ceiling)
    throw Error(ErrorCode::BoxTooLarge,
                "search box needs more than " + std::to_string(ceiling) +
                    " iterations; lower --bound",
                "bound");

  const Integer h2 = lat.square(s.h());
  const Integer hK = lat.pair(s.h(), s.canonical());
  const auto rhs = half_if_even(3 * h2 + hK);
  if (!rhs) return {};

  std::vector<Integer> coeffs(n, Integer(-bound));
  std::vector<DivisorClass> out;
  // Odometer over every coordinate except the pivot.
  while (true) {
    Integer partial = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pivot) partial += w[i] * coeffs[i];
    const Integer rest = *rhs - partial;
    if (rest % w[pivot] == 0) {
      const Integer x = rest / w[pivot];
      if (x >= -bound && x <= bound) {
        coeffs[pivot] = x;
        DivisorClass d(coeffs);
        if (line_numeric_check(s, d).passed()) out.push_back(std::move(d));
      }
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (i == pivot) continue;
      if (coeffs[i] < bound) {
        ++coeffs[i];
        break;
      }
      coeffs[i] = -bound;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ulrich
