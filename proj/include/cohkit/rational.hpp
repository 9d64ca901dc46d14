#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cohkit {

using Rational = mpq_class;

// Accepts integers, "p/q" and plain decimals such as "-0.35". Decimals are
// converted exactly, so "0.1" is 1/10.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" for integers.
std::string to_string(const Rational& r);

// Rounded to `places` decimals (half away from zero), trailing zeros dropped.
std::string to_decimal(const Rational& r, int places = 15);

// Smallest-denominator rational in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Rational exact_from_double(double x);

// Simplest rational within tol of x.
Rational rationalize(double x, double tol);

Rational pow2(int k);

}  // namespace cohkit
