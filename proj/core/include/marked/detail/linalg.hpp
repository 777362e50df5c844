#pragma once

#include <vector>

#include "marked/rational.hpp"

namespace marked::detail {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination:
/// divisions are exact, entries stay integral, no floating point.
std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m);

/// Rank of a rational matrix; rows are scaled integral first.
std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& m);

}  // namespace marked::detail
