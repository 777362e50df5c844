#include <doctest.h>

#include "helpers.hpp"
#include "marked/criteria.hpp"
#include "marked/oracle.hpp"

using namespace marked;
using namespace testutil;

TEST_CASE("borel bfs oracle basics") {
    CHECK(borel_bfs_leq(mono("x1^2", 3), mono("x1^2", 3)));  // reflexive
    CHECK(borel_bfs_leq(mono("x1^2", 3), mono("x2^2", 3)));
    CHECK_FALSE(borel_bfs_leq(mono("x2^2", 3), mono("x1^2", 3)));
    CHECK_FALSE(borel_bfs_leq(mono("x1", 3), mono("x2^2", 3)));  // degree mismatch
}

TEST_CASE("star uniqueness scans on the worked-example ideals") {
    for (auto j : {j1(), j2(), j3(), j4(), nonbastano(), esempirid(), no_ssr()})
        CHECK(star_uniqueness_scan(j, j.regularity() + 3));
    // a non strongly stable ideal fails the scan: x2*x1 has no valid pair
    CHECK_FALSE(star_uniqueness_scan(ideal("x1", 3), 3));
}

TEST_CASE("rank problems hold every same-degree product over the slice basis") {
    auto j = esempirid();
    auto g = monomial_set(j);
    auto p = build_rank_problem(g, 3);
    CHECK(p.degree == 3);
    CHECK(p.columns.size() == static_cast<std::size_t>(count_monomials_of_degree(3, 3)));
    // one row per (generator, degree-1 multiplier)
    CHECK(p.rows.size() == j.basis().size() * 3);
    for (const auto& row : p.rows) CHECK(row.x_degree() == 3);
}

TEST_CASE("rank oracle agrees with the criteria on the worked examples") {
    SUBCASE("monomial sets") {
        for (auto j : {j1(), nonbastano(), esempirid()})
            CHECK(hilbert_rank_check(monomial_set(j), default_rank_window(j)));
    }

    SUBCASE("the a_1 family member") {
        auto j = ideal("x2, x1^2, x1*x0", 3);
        std::vector<MarkedPoly> polys;
        polys.push_back(MarkedPoly{mono("x2", 3),
                                   XPoly::monomial(mono("x1", 3), ParamPoly::constant(Rational(-1)))});
        polys.push_back(MarkedPoly{mono("x1^2", 3), XPoly{}});
        polys.push_back(MarkedPoly{mono("x1*x0", 3), XPoly{}});
        MarkedSet a1(j, std::move(polys), false);
        CHECK(hilbert_rank_check(a1, default_rank_window(j)));
    }

    SUBCASE("the bad nonbastano completion fails: x1^3 inflates the degree-3 slice") {
        const std::string text =
            "x3*x0 = -x1^2\nx3^2 = 0\nx3*x2 = 0\nx3*x1 = 0\nx2^2 = 0\n";
        auto bad = parse_marked_set(text, nonbastano());
        CHECK_FALSE(hilbert_rank_check(bad, default_rank_window(nonbastano())));
        // the window must reach past the regularity
        CHECK_THROWS_AS(hilbert_rank_check(bad, 2), std::invalid_argument);
    }
}
