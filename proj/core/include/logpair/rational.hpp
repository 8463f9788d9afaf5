#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logpair {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", or "-p/q" into a canonical rational. Whitespace around
/// the text is ignored. Throws InputError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form with positive denominator; integers print without
/// a "/1" suffix.
std::string to_string(const Rational& q);

/// num / den in lowest terms. Throws InputError for den = 0.
Rational ratio(long num, long den);

bool is_integer(const Rational& q);

/// Converts an integral rational to long. Throws InputError if it is not an
/// integer or does not fit.
long to_long(const Rational& q);

Rational sum(std::span<const Rational> values);

}  // namespace logpair
