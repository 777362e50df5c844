#pragma once

#include <gmpxx.h>

#include <string>

namespace marked {

/// Exact rational number, always canonical (gcd(num, den) = 1, den > 0).
/// All arithmetic in the library is exact; no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-3", "3/2", "-3/2". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical text form: "3", "-3", "3/2".
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace marked
