#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "marked/marked_set.hpp"

namespace marked {

/// Text formats (all round-trip through the printers):
///   monomial     x3^2*x1*x0   caret powers, '*' separators, "1" for the
///                             constant; the parser takes variables in any
///                             order and multiplies repeats
///   ideal        x3^2, x3*x2, x2^3
///   polynomial   x1*x0 - 3/2*x0^2 + x2
///   marked set   one "head = tail" line per polynomial (f = head - tail),
///                '#' comments and blank lines ignored; "0" for an empty
///                tail
/// Parse errors carry a position and throw std::invalid_argument.

/// Number of variables implied by the highest index present (index+1).
/// Returns 0 for the constant monomial "1".
std::size_t infer_nvars(const std::string& text);

Monomial parse_monomial(const std::string& text, std::size_t nvars);

/// Comma-separated generators. When nvars is nullopt the ambient size is
/// inferred as (max variable index) + 1 over the whole list.
StronglyStableIdeal parse_ideal(const std::string& text,
                                std::optional<std::size_t> nvars = std::nullopt);

/// Polynomial with rational coefficients over the x variables.
XPoly parse_xpoly(const std::string& text, std::size_t nvars);

/// "head = tail" lines over the given ideal; heads must cover the basis
/// exactly (or the superminimal generators with superminimal = true).
MarkedSet parse_marked_set(std::istream& in, const StronglyStableIdeal& j,
                           bool superminimal = false);
MarkedSet parse_marked_set(const std::string& text, const StronglyStableIdeal& j,
                           bool superminimal = false);

std::string to_string(const StronglyStableIdeal& j);
std::string to_string(const MarkedSet& set);

}  // namespace marked
