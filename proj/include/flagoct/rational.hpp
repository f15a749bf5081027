#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagoct {

// GMP keeps mpq values canonical: lowest terms, positive denominator, 0 == 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "n" or "n/d" with an optional leading sign; d must be positive.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace flagoct
