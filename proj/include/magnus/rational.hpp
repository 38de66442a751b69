#pragma once

#include <gmpxx.h>

#include <string>

namespace magnus {

/// Exact rational scalar. Always kept canonical: reduced fraction,
/// positive denominator. Integer inputs stay integer under ring ops.
using Rational = mpq_class;
using Integer = mpz_class;

bool is_integer(const Rational& q);

/// Exact integer view of an integer-valued scalar; throws std::domain_error
/// if the denominator is not 1.
Integer to_integer(const Rational& q);

/// Parses "p", "-p" or "p/q" (decimal); canonicalizes. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace magnus
