#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reembed {

// mpq_class keeps every value canonical: reduced, positive denominator, 0 == 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Parses "n" or "n/d" (optional leading sign on n). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace reembed
