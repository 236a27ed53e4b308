#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace irrlat {

// Arbitrary precision throughout: dilations multiply denominators and there
// is no acceptable overflow regime for exact predicates.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

// Floor division, den > 0.
Int floor_div(const Int& num, const Int& den);

Int rational_floor(const Rational& q);
Int rational_ceil(const Rational& q);

bool is_integer(const Rational& q);

// n >= 0; largest s with s*s <= n.
Int isqrt_floor(const Int& n);

// n > 0; returns (s, f) with n = s^2 * f and f squarefree.
std::pair<Int, Int> split_square(const Int& n);

bool is_squarefree(const Int& n);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

}  // namespace irrlat
