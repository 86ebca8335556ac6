#pragma once

// Shared fixtures and random generators for the unit and acceptance tests.

#include <random>
#include <vector>

#include "ulrich/catalog.hpp"
#include "ulrich/invariants.hpp"

namespace testing_support {

inline const std::vector<ulrich::PolarizedSurface>& catalog_surfaces() {
  static const std::vector<ulrich::PolarizedSurface> surfaces = [] {
    std::vector<ulrich::PolarizedSurface> out;
    for (unsigned l = 1; l <= 4; ++l) out.push_back(ulrich::p2_surface(l));
    for (unsigned e = 0; e <= 3; ++e)
      for (unsigned a = 1; a <= 3; ++a) out.push_back(ulrich::hirzebruch_surface(e, a, a * e + 2));
    for (int d = 3; d <= 9; ++d) out.push_back(ulrich::del_pezzo(d));
    for (long long h2 = 8; h2 <= 14; h2 += 2) out.push_back(ulrich::enriques_numeric(h2));
    for (auto& row : ulrich::table1()) out.push_back(std::move(row));
    out.push_back(ulrich::kim_cubic(4, 9));
    out.push_back(ulrich::kim_cubic(5, 3));
    return out;
  }();
  return surfaces;
}

struct Instance {
  const ulrich::PolarizedSurface* surface;
  ulrich::ChernData data;
};

/// Deterministic stream of (surface, Chern data) pairs: rank in 1..4,
/// c1 entries in [-10, 10], c2 in [-100, 100].
inline std::vector<Instance> random_instances(std::size_t count, unsigned seed = 20240611u) {
  std::mt19937 rng(seed);
  const auto& surfaces = catalog_surfaces();
  std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
  std::uniform_int_distribution<int> rank(1, 4);
  std::uniform_int_distribution<long long> coeff(-10, 10);
  std::uniform_int_distribution<long long> c2(-100, 100);
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& s = surfaces[pick(rng)];
    std::vector<ulrich::Integer> c1;
    for (std::size_t j = 0; j < s.lattice().rank(); ++j) c1.emplace_back(coeff(rng));
    out.push_back({&s, {rank(rng), ulrich::DivisorClass(std::move(c1)), c2(rng)}});
  }
  return out;
}

/// Random class with entries in [-bound, bound].
inline ulrich::DivisorClass random_class(std::mt19937& rng, std::size_t rank, long long bound) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::vector<ulrich::Integer> c;
  for (std::size_t i = 0; i < rank; ++i) c.emplace_back(coeff(rng));
  return ulrich::DivisorClass(std::move(c));
}

}  // namespace testing_support
