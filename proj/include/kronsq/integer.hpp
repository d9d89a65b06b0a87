#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kronsq {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

// C(n, k) for any integer n (negative n gives the usual polynomial value), k >= 0.
Integer binomial(const Integer& n, long k);

// Always "num/den", e.g. "-3/1".
std::string to_fraction_string(const Rational& q);
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);

}  // namespace kronsq
