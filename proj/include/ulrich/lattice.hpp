#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ulrich/arith.hpp"

namespace ulrich {

/// Integer coordinates of a divisor class in a lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<long long> coeffs);

  static DivisorClass zero(std::size_t rank);
  /// The i-th basis vector of a lattice of the given rank.
  static DivisorClass basis(std::size_t rank, std::size_t i);

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  auto begin() const noexcept { return coeffs_.begin(); }
  auto end() const noexcept { return coeffs_.end(); }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Integer& k);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Integer(-1); }
  friend DivisorClass operator*(const Integer& k, DivisorClass a) { return a *= k; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic by coefficient vector.
  friend bool operator<(const DivisorClass& a, const DivisorClass& b);

 private:
  std::vector<Integer> coeffs_;
};

/// "(1, -2, 0)".
std::string to_string(const DivisorClass& d);

using IntMatrix = std::vector<std::vector<Integer>>;

/// Free abelian group with a symmetric integer pairing and a distinguished
/// canonical class. Only `make_lattice` builds one, so every instance is
/// symmetric and satisfies adjunction parity: b^2 + b.K is even for each
/// basis vector b, hence D^2 + D.K is even for every integral D (the map
/// D -> D^2 + D.K mod 2 is additive because 2 D.E vanishes mod 2).
class IntersectionLattice {
 public:
  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const DivisorClass& canonical() const noexcept { return canonical_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// D^T * gram * E.
  Integer pair(const DivisorClass& d, const DivisorClass& e) const;
  Integer square(const DivisorClass& d) const { return pair(d, d); }

  /// The coefficient vector of the linear form E -> D.E, i.e. gram * D.
  DivisorClass linear_form(const DivisorClass& d) const;

  /// Throws DimensionMismatch unless d has exactly rank() coefficients.
  void require_member(const DivisorClass& d, std::string_view what) const;

  /// "2l - e1 - e2" style rendering against the basis labels.
  std::string format(const DivisorClass& d) const;

  friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

 private:
  IntersectionLattice(IntMatrix gram, DivisorClass canonical, std::vector<std::string> labels)
      : gram_(std::move(gram)), canonical_(std::move(canonical)), labels_(std::move(labels)) {}

  friend IntersectionLattice make_lattice(IntMatrix, DivisorClass, std::vector<std::string>);

  IntMatrix gram_;
  DivisorClass canonical_;
  std::vector<std::string> labels_;
};

/// Validating constructor. Throws DimensionMismatch, AsymmetricGram or
/// ParityViolation.
IntersectionLattice make_lattice(IntMatrix gram, DivisorClass canonical,
                                 std::vector<std::string> labels);

inline Integer pair(const IntersectionLattice& lattice, const DivisorClass& d,
                    const DivisorClass& e) {
  return lattice.pair(d, e);
}

/// Pic(F_e): basis (xi, f), xi^2 = -e, xi.f = 1, f^2 = 0, K = -2xi - (e+2)f.
IntersectionLattice hirzebruch_lattice(unsigned e);

/// Pic of P^2 blown up at m points: basis (l, e1..em), diag(1,-1,..,-1),
/// K = -3l + sum e_i.
IntersectionLattice blowup_p2_lattice(unsigned m);

/// Same lattice with caller-chosen labels for the exceptional classes.
IntersectionLattice blowup_p2_lattice(std::vector<std::string> exceptional_labels);

}  // namespace ulrich
