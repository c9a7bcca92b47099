#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace znp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (no decimals, no whitespace). Throws InvalidModel.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. Prefer this over the two-argument mpq_class
/// constructor, which does not reduce.
Rational ratio(long num, long den);
Rational ratio(const Integer& num, const Integer& den);

/// Canonical "p/q" or "p" form.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational abs(const Rational& value);

/// Exact rational power with integer exponent (negative exponents allowed for
/// nonzero bases).
Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);
Integer factorial(unsigned long n);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& value);

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const Integer& value);

}  // namespace znp
