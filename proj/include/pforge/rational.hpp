#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pforge {

/// Exact rational number. GMP keeps results canonical: reduced, positive
/// denominator, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/2", "+4/6" (reduced on read). Throws Error("parse-error").
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace pforge
