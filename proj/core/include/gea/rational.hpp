#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gea {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" (q > 0, gcd 1) or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" with an optional leading sign. Throws ParseError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace gea
