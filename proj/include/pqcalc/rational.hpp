#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pqcalc/errors.hpp"

namespace pqcalc {

// Unbounded integers and rationals. cpp_rational keeps values in lowest terms
// with a positive denominator, which is exactly the canonical form required of
// coefficients here.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^e for any integer e; negative e requires base != 0.
Rational ratPow(const Rational& base, long e);

// C(n,2) = n(n-1)/2 for n >= 0.
long binom2(long n);

// "5", "-3/4" (denominator omitted when 1).
std::string ratToString(const Rational& r);

// Accepts "12", "-3/4", "0.25", "1e-3". Decimal forms are converted exactly.
Rational parseRational(std::string_view text);

double ratToDouble(const Rational& r);

}  // namespace pqcalc
