#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bincover {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `num/den`, an integer, or a base-10 literal such as `0.125` or
/// `3.5e-2` into an exact rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// `num/den` (or `num` when the denominator is 1), always in lowest terms.
std::string format_rational(const Rational& q);

/// Decimal rendering with `digits` significant digits.
std::string format_decimal(double value, int digits = 12);

BigInt floor(const Rational& q);

/// floor(q) as a 64-bit integer; throws when it does not fit.
std::int64_t floor_to_int64(const Rational& q);

Rational make_rational(long num, long den = 1);

}  // namespace bincover
