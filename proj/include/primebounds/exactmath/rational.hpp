#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pb::exact {

/// Arbitrary-precision integer and reduced rational (GMP).
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses an exact rational from decimal or fraction notation.
///
/// Accepted forms: `42`, `-0.35`, `466.1275`, `6.93e-12`, `1E14`, `22/7`.
/// Finite decimals convert exactly; nothing goes through binary floating point.
/// Throws pb::DomainError on malformed input.
BigRational parse_rational(std::string_view text);

/// Exact value of a finite double (every double is a dyadic rational).
BigRational from_double(double value);

/// -1, 0 or +1.
int sign(const BigRational& value);

/// `p/q` form, or just `p` when the denominator is 1.
std::string to_string(const BigRational& value);

/// Decimal rendering with `digits` significant digits (rounded, for display only).
std::string to_decimal(const BigRational& value, int digits = 17);

/// Nearest double (round-to-nearest from GMP is not guaranteed; use for display and seeding only).
double to_double(const BigRational& value);

BigRational pow(const BigRational& base, unsigned exponent);

/// floor(value) as an integer.
BigInt floor(const BigRational& value);

}  // namespace pb::exact
