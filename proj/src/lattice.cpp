#include "ulrich/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ulrich {

DivisorClass::DivisorClass(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
}

DivisorClass DivisorClass::zero(std::size_t rank) {
  return DivisorClass(std::vector<Integer>(rank, Integer(0)));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t i) {
  std::vector<Integer> c(rank, Integer(0));
  c.at(i) = 1;
  return DivisorClass(std::move(c));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size())
    throw Error(ErrorCode::DimensionMismatch, "adding divisor classes of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size())
    throw Error(ErrorCode::DimensionMismatch, "subtracting divisor classes of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

bool operator<(const DivisorClass& a, const DivisorClass& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string to_string(const DivisorClass& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += d[i].str();
  }
  return s + ")";
}

Integer IntersectionLattice::pair(const DivisorClass& d, const DivisorClass& e) const {
  require_member(d, "left operand");
  require_member(e, "right operand");
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (d[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * e[j];
    total += d[i] * row;
  }
  return total;
}

DivisorClass IntersectionLattice::linear_form(const DivisorClass& d) const {
  require_member(d, "divisor");
  std::vector<Integer> w(rank(), Integer(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) w[i] += gram_[i][j] * d[j];
  return DivisorClass(std::move(w));
}

void IntersectionLattice::require_member(const DivisorClass& d, std::string_view what) const {
  if (d.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has " + std::to_string(d.size()) +
                    " coefficients, lattice rank is " + std::to_string(rank()));
  }
}

std::string IntersectionLattice::format(const DivisorClass& d) const {
  require_member(d, "divisor");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Integer& c = d[i];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << labels_[i];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

IntersectionLattice make_lattice(IntMatrix gram, DivisorClass canonical,
                                 std::vector<std::string> labels) {
  const std::size_t n = gram.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "lattice rank must be positive", "gram");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "gram row " + std::to_string(i) + " has " + std::to_string(gram[i].size()) +
                      " entries, expected " + std::to_string(n),
                  "gram");
  }
  if (canonical.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "canonical class has " + std::to_string(canonical.size()) +
                    " coefficients, expected " + std::to_string(n),
                "K");
  if (labels.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "got " + std::to_string(labels.size()) + " basis labels, expected " +
                    std::to_string(n),
                "basis");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw Error(ErrorCode::AsymmetricGram,
                    "gram[" + std::to_string(i) + "][" + std::to_string(j) + "] != gram[" +
                        std::to_string(j) + "][" + std::to_string(i) + "]",
                    "gram");

  IntersectionLattice lattice(std::move(gram), std::move(canonical), std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = DivisorClass::basis(n, i);
    const Integer s = lattice.square(b) + lattice.pair(b, lattice.canonical());
    if (!is_even(s))
      throw Error(ErrorCode::ParityViolation,
                  "basis class " + lattice.labels()[i] + " has b^2 + b.K = " + s.str() +
                      ", which is odd",
                  "K");
  }
  return lattice;
}

IntersectionLattice hirzebruch_lattice(unsigned e) {
  const Integer ee = e;
  return make_lattice({{-ee, 1}, {1, 0}}, DivisorClass({Integer(-2), Integer(-(ee + 2))}),
                      {"xi", "f"});
}

IntersectionLattice blowup_p2_lattice(unsigned m) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
  return blowup_p2_lattice(std::move(labels));
}

IntersectionLattice blowup_p2_lattice(std::vector<std::string> exceptional_labels) {
  const std::size_t n = exceptional_labels.size() + 1;
  IntMatrix gram(n, std::vector<Integer>(n, Integer(0)));
  std::vector<Integer> k(n, Integer(1));
  gram[0][0] = 1;
  k[0] = -3;
  for (std::size_t i = 1; i < n; ++i) gram[i][i] = -1;
  std::vector<std::string> labels{"l"};
  for (auto& l : exceptional_labels) labels.push_back(std::move(l));
  return make_lattice(std::move(gram), DivisorClass(std::move(k)), std::move(labels));
}

}  // namespace ulrich
