#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace geozeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p/q` or a plain integer. Decimal points and exponents are rejected
/// so that evaluation points stay exact. Throws geozeta::Error.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` form; integers print without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

double to_double(const Rational& value);

/// num/den in lowest terms; den != 0.
Rational ratio(const Integer& num, const Integer& den);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Integer power of a rational, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace geozeta
