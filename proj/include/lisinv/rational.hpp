#pragma once

#include <gmpxx.h>

#include <string>

namespace lisinv {

// Arbitrary precision integers and canonical rationals (GMP).
using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits = 12);
std::string to_decimal(const mpf_class& r, int digits = 12);

/// True when gcd(|num|, den) = 1 and den >= 1.
bool is_canonical(const Rational& r);

}  // namespace lisinv
