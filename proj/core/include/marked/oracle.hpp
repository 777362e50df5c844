#pragma once

#include "marked/marked_set.hpp"

namespace marked {

/// Brute-force validators mirroring the definitions, used as independent
/// ground truth by the test suite and behind `check-basis --oracle`.

/// b >=_B a by breadth-first search over increasing elementary moves;
/// the closed-form criterion of borel_compare is validated against this.
bool borel_bfs_leq(const Monomial& a, const Monomial& b);

/// Exhaustively checks that every monomial of J of degree <= d_max has
/// exactly one (generator, cofactor) pair with min(generator) >=
/// max(cofactor).
bool star_uniqueness_scan(const StronglyStableIdeal& j, std::int64_t d_max);

/// One degree slice of the rank ground truth: every product x^d * f_a
/// of the given degree, as rows over the degree-slice monomial basis
/// (Lex descending). All rows are homogeneous of that degree.
struct RankProblem {
    std::int64_t degree = 0;
    std::vector<XPoly> rows;
    std::vector<Monomial> columns;
};

RankProblem build_rank_problem(const MarkedSet& g, std::int64_t degree);

/// Linear-algebra ground truth for the marked-basis property: for every
/// degree l from the initial degree to l_max, the products x^d * f_a of
/// degree l must span a space of exact rational rank equal to the number
/// of degree-l monomials of J. Fraction-free elimination, no floats.
bool hilbert_rank_check(const MarkedSet& g, int l_max);

/// Window used by the tests: regularity + n + 1 covers every degree
/// where new EK syzygies live; widen through l_max for diagnostics.
int default_rank_window(const StronglyStableIdeal& j);

}  // namespace marked
