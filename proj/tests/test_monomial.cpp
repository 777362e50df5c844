#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "marked/monomial.hpp"
#include "marked/oracle.hpp"

using namespace marked;
using testutil::mono;

TEST_CASE("lex order follows the x0 < ... < xn convention") {
    CHECK(lex_greater(mono("x1", 3), mono("x0", 3)));
    CHECK(lex_greater(mono("x2^2", 3), mono("x2*x1", 3)));
    // compared as exponent vectors, degree does not dominate
    CHECK(lex_greater(mono("x0^4*x2^2", 3), mono("x2", 3)));
    CHECK(lex_greater(mono("x2^2", 3), mono("x2", 3)));
    CHECK(lex_cmp(mono("x1*x0", 3), mono("x1*x0", 3)) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_cmp(mono("x1", 2), mono("x1", 3)), std::invalid_argument);
}

TEST_CASE("lex order is total: antisymmetric and transitive on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 4);
    for (int iter = 0; iter < 2000; ++iter) {
        Monomial a({e(rng), e(rng), e(rng), e(rng)});
        Monomial b({e(rng), e(rng), e(rng), e(rng)});
        Monomial c({e(rng), e(rng), e(rng), e(rng)});
        if (lex_greater(a, b)) CHECK_FALSE(lex_greater(b, a));
        if (lex_cmp(a, b) == std::strong_ordering::equal) CHECK(a == b);
        if (lex_greater(a, b) && lex_greater(b, c)) CHECK(lex_greater(a, c));
    }
}

TEST_CASE("borel comparison: elementary-move reachability") {
    CHECK(borel_leq(mono("x1^2", 3), mono("x2*x1", 3)));  // single move e+_{1,2}
    CHECK(borel_leq(mono("x2*x1", 3), mono("x2*x1", 3))); // reflexive
    CHECK(borel_compare(mono("x2*x0", 3), mono("x1^2", 3)) == BorelRel::Incomparable);
    CHECK(borel_compare(mono("x1^2", 3), mono("x2*x0", 3)) == BorelRel::Incomparable);
    CHECK(borel_compare(mono("x2*x1", 3), mono("x1^2", 3)) == BorelRel::Less);
    CHECK(borel_compare(mono("x1", 3), mono("x1^2", 3)) == BorelRel::Incomparable);
}

TEST_CASE("borel closed form agrees with the BFS oracle, degree <= 5, 4 variables") {
    for (int d = 1; d <= 5; ++d) {
        const auto all = monomials_of_degree(4, d);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(borel_leq(a, b) == borel_bfs_leq(a, b));
    }
}

TEST_CASE("every term order refines the borel order: lex does") {
    for (int d = 1; d <= 4; ++d) {
        const auto all = monomials_of_degree(4, d);
        for (const auto& a : all)
            for (const auto& b : all)
                if (borel_leq(a, b) && a != b) CHECK(lex_greater(b, a));
    }
}

TEST_CASE("elementary moves") {
    CHECK(elementary_move_up(mono("x1^2", 3), 1, 2) == mono("x2*x1", 3));
    CHECK(elementary_move_up(mono("x2*x1^2*x0^2", 3), 1, 2) == mono("x2^2*x1*x0^2", 3));
    CHECK(elementary_move_up(mono("x0", 2), 0, 1) == mono("x1", 2));
    CHECK_THROWS_AS(elementary_move_up(mono("x1", 3), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(elementary_move_up(mono("x2", 3), 1, 2), std::invalid_argument);
}

TEST_CASE("dehomogenize") {
    CHECK(dehomogenize(mono("x3*x0", 4)) == mono("x3", 4));
    CHECK(dehomogenize(mono("x2^3*x0^2", 3)) == mono("x2^3", 3));
    CHECK(dehomogenize(mono("x1^6", 3)) == mono("x1^6", 3));
    // idempotent
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int iter = 0; iter < 200; ++iter) {
        Monomial m({e(rng), e(rng), e(rng)});
        CHECK(dehomogenize(dehomogenize(m)) == dehomogenize(m));
    }
}

TEST_CASE("min_var / max_var") {
    CHECK(min_var(mono("x2*x1*x0", 3)) == 0);
    CHECK(max_var(mono("x2*x1*x0", 3)) == 2);
    CHECK(min_var(mono("x2^2", 3)) == 2);
    CHECK(min_var(mono("x3*x0", 4)) == 0);
    CHECK(max_var(mono("x3*x0", 4)) == 3);
    CHECK_THROWS_AS(min_var(Monomial(3)), std::invalid_argument);
    CHECK_THROWS_AS(max_var(Monomial(3)), std::invalid_argument);
}

TEST_CASE("printer/parser round-trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(0, 5);
    for (int iter = 0; iter < 500; ++iter) {
        Monomial m({e(rng), e(rng), e(rng), e(rng)});
        CHECK(parse_monomial(to_string(m), 4) == m);
    }
    CHECK(to_string(Monomial(3)) == "1");
    CHECK(parse_monomial("1", 3) == Monomial(3));
    CHECK(parse_monomial("x0^2*x1*x3", 4) == mono("x3*x1*x0^2", 4));
}

TEST_CASE("degree-slice enumeration is lex-descending and counted in closed form") {
    for (int d = 0; d <= 5; ++d) {
        const auto all = monomials_of_degree(4, d);
        CHECK(static_cast<std::int64_t>(all.size()) == count_monomials_of_degree(4, d));
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(lex_greater(all[i - 1], all[i]));
    }
}
