#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dcore {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q" or "-p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal preview with `digits` significant digits.
std::string decimal_preview(double value, int digits = 6);

} // namespace dcore
