#pragma once

// Arbitrary-precision rationals and the exact combinatorial helpers built on them.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sqsum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double value);

/// Nearest double to an exact rational.
double to_double(const Rational& value);

/// Always "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string to_string(const Rational& value);

/// Accepts "p/q", integers, and decimal literals such as "0.25" or "1e-3";
/// decimals are read exactly (0.1 -> 1/10). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// base^e for e >= 0.
Rational pow(const Rational& base, unsigned long e);

}  // namespace sqsum
