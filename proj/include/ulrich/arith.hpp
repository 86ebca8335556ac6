#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulrich/error.hpp"

namespace ulrich {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_even(const Integer& n) { return (n & 1) == 0; }

/// n/2 if n is even, nothing otherwise.
std::optional<Integer> half_if_even(const Integer& n);

/// n/2, throwing `code` when n is odd.
Integer exact_half(const Integer& n, ErrorCode code, std::string_view what);

/// C(r, 2) = r(r-1)/2.
Integer choose2(const Integer& r);

/// Numerator when the rational is an integer.
std::optional<Integer> as_integer(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Floor of the square root when n is a perfect square, nothing otherwise.
std::optional<Integer> exact_sqrt(const Integer& n);

}  // namespace ulrich
