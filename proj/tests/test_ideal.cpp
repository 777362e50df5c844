#include <doctest.h>

#include "helpers.hpp"
#include "marked/errors.hpp"
#include "marked/hilbert.hpp"
#include "marked/ideal.hpp"
#include "marked/oracle.hpp"

using namespace marked;
using namespace testutil;

TEST_CASE("from_generators minimalizes and sorts canonically") {
    auto j = ideal("x3, x3^2, x2^2", 4);
    CHECK(j.basis() == std::vector<Monomial>{mono("x3", 4), mono("x2^2", 4)});

    // dehomogenized generators of (x2, x1^2, x1*x0), minimalized
    auto k = StronglyStableIdeal::from_generators(
        {mono("x2", 3), mono("x1^2", 3), mono("x1", 3)}, 3);
    CHECK(k.basis() == std::vector<Monomial>{mono("x2", 3), mono("x1", 3)});

    auto sat = ideal("x2^2, x2*x1, x1^2", 3);
    CHECK(sat.basis().size() == 3);

    CHECK_THROWS_AS(StronglyStableIdeal::from_generators({}, 3), std::invalid_argument);
}

TEST_CASE("is_strongly_stable") {
    CHECK(is_strongly_stable(ideal("x2^3, x1*x2^2, x1^2*x2, x1^5", 3)));
    CHECK_FALSE(is_strongly_stable(ideal("x1", 3)));
    CHECK(is_strongly_stable(nonbastano()));
    CHECK(is_strongly_stable(no_ssr()));
    CHECK(is_strongly_stable(esempirid()));
    for (auto j : {j1(), j2(), j3(), j4()}) CHECK(is_strongly_stable(j));
}

TEST_CASE("contains") {
    auto j = ideal("x2, x1^2", 3);
    CHECK(j.contains(mono("x2*x1^2", 3)));
    CHECK_FALSE(j.contains(mono("x0*x1", 3)));
    CHECK(ideal("x3, x2^2", 4).contains(mono("x2^2*x3*x0", 4)));
}

TEST_CASE("saturation") {
    CHECK(saturation(no_ssr()) == ideal("x2^2, x2*x1, x1^2", 3));
    CHECK(saturation(nonbastano()) == ideal("x3, x2^2", 4));
    auto j = ideal("x2^3, x1*x2^2, x1^2*x2, x1^5", 3);  // x0-free basis
    CHECK(saturation(j) == j);
    CHECK(j.is_saturated());
    CHECK_FALSE(nonbastano().is_saturated());
}

TEST_CASE("truncate") {
    CHECK(truncate(ideal("x3, x2^2", 4), 2) == nonbastano());
    CHECK(truncate(ideal("x2, x1^2", 3), 2) == esempirid());
    CHECK(truncate(ideal("x3, x2^2", 4), 0) == ideal("x3, x2^2", 4));
    // truncate then saturate is the identity on saturated inputs
    for (auto j : {j1(), j2(), j3(), j4()})
        for (int m = 0; m <= j.regularity() + 2; ++m) CHECK(saturation(truncate(j, m)) == j);
}

TEST_CASE("is_m_truncation") {
    CHECK(is_m_truncation(nonbastano()) == 2);
    CHECK(is_m_truncation(j1()) == 2);  // saturated: its own truncation at the initial degree
    CHECK(is_m_truncation(esempirid()) == 2);

    // (x3^2, x3x2, x3x1)_{>=4} + (x2^2)_{>=6} is not a truncation
    std::vector<Monomial> gens;
    auto a = ideal("x3^2, x3*x2, x3*x1", 4);
    for (const auto& x : monomials_of_degree(4, 4))
        if (a.contains(x)) gens.push_back(x);
    auto b = ideal("x2^2", 4);
    for (const auto& x : monomials_of_degree(4, 6))
        if (b.contains(x)) gens.push_back(x);
    auto jn = StronglyStableIdeal::from_generators(gens, 4);
    CHECK(is_strongly_stable(jn));
    CHECK(saturation(jn) == ideal("x3^2, x2*x3, x1*x3, x2^2", 4));
    CHECK_FALSE(is_m_truncation(jn).has_value());
    CHECK_FALSE(is_m_truncation(no_ssr()).has_value());
}

TEST_CASE("superminimal generators") {
    auto jsat = ideal("x2^3, x2^2*x1, x2*x1^2, x1^6", 3);
    auto j = truncate(jsat, 5);
    CHECK(superminimal_generators(j) ==
          std::vector<Monomial>{mono("x2^3*x0^2", 3), mono("x2^2*x1*x0^2", 3),
                                mono("x2*x1^2*x0^2", 3), mono("x1^6", 3)});

    auto k = ideal("x2^2, x2*x1^2, x2*x1*x0, x2*x0^2", 3);
    CHECK(superminimal_generators(k) == std::vector<Monomial>{mono("x2*x0^2", 3)});

    // saturated: sB = B
    CHECK(superminimal_generators(j1()) == j1().basis());
}

TEST_CASE("complement") {
    auto c = complement(nonbastano(), 2);
    CHECK(c == std::vector<Monomial>{mono("x2*x1", 4), mono("x2*x0", 4), mono("x1^2", 4),
                                     mono("x1*x0", 4), mono("x0^2", 4)});
    CHECK(complement(ideal("x2, x1^2", 3), 2) ==
          std::vector<Monomial>{mono("x1*x0", 3), mono("x0^2", 3)});
    // below the initial degree: everything
    CHECK(complement(j1(), 1).size() == 4);

    // m-truncations share the sous-escalier with the saturation from m up
    auto j = esempirid();
    auto jsat = saturation(j);
    for (int d = 2; d <= 6; ++d) CHECK(complement(j, d) == complement(jsat, d));
}

TEST_CASE("star decomposition") {
    auto jsat = ideal("x2, x1^2", 3);
    auto s1 = star_decompose(jsat, mono("x2*x1^2", 3));
    CHECK(s1.generator == mono("x2", 3));
    CHECK(s1.cofactor == mono("x1^2", 3));

    auto j = esempirid();
    auto s2 = star_decompose(j, mono("x2*x1^2", 3));
    CHECK(s2.generator == mono("x2*x1", 3));
    CHECK(s2.cofactor == mono("x1", 3));

    auto jn = ideal("x3^2, x2*x3, x1*x3, x2^2", 4);
    auto s3 = star_decompose(jn, mono("x0^4*x2^4", 4));
    CHECK(s3.generator == mono("x2^2", 4));
    CHECK(s3.cofactor == mono("x0^4*x2^2", 4));

    CHECK_THROWS_AS(star_decompose(jsat, mono("x1*x0", 3)), DomainError);

    // uniqueness, exhaustively, a few degrees past the regularity
    for (auto jj : {j1(), nonbastano(), esempirid(), no_ssr()})
        CHECK(star_uniqueness_scan(jj, jj.regularity() + 3));
}

TEST_CASE("descLex instance check: cofactors drop in lex after dehomogenization") {
    for (auto jj : {esempirid(), nonbastano(), no_ssr()}) {
        for (int a = 0; a + 1 <= 6; ++a) {
            for (const auto& eps : complement(jj, a)) {
                for (int b = 1; a + b <= 6; ++b) {
                    for (const auto& delta : monomials_of_degree(jj.nvars(), b)) {
                        const Monomial prod = eps * delta;
                        if (!jj.contains(prod)) continue;
                        auto dec = star_decompose(jj, prod);
                        CHECK(lex_less(dec.cofactor, delta));
                        // dehomogenized descent; degenerates to equality only
                        // when delta is the cofactor times a pure x0 power
                        if (dec.cofactor.divides(delta) &&
                            dehomogenize(delta / dec.cofactor).is_one())
                            CHECK(dehomogenize(dec.cofactor) == dehomogenize(delta));
                        else
                            CHECK(lex_less(dehomogenize(dec.cofactor), dehomogenize(delta)));
                    }
                }
            }
        }
    }
}

TEST_CASE("regularity, satiety, initial degree") {
    CHECK(j2().regularity() == 4);
    CHECK(j4().regularity() == 6);
    CHECK(nonbastano().satiety() == 2);
    CHECK(j1().satiety() == 0);
    CHECK(j1().initial_degree() == 2);
    CHECK(no_ssr().regularity() == 4);
}

TEST_CASE("rho") {
    CHECK(rho(j2()) == 3);
    CHECK(rho(j3()) == 5);
    CHECK_FALSE(rho(j1()).has_value());
    CHECK(rho(j4()) == 6);
}

TEST_CASE("hilbert function and polynomial") {
    for (auto j : {j1(), j2(), j3(), j4()}) {
        auto p = hilbert_polynomial(j);
        CHECK(p.str() == "4*t");
        for (int t = j.regularity(); t <= j.regularity() + 5; ++t)
            CHECK(p(t) == hilbert_function(j, t));
    }
    auto pw = hilbert_polynomial(ideal("x2^3, x1*x2^2, x1^2*x2, x1^5", 3));
    CHECK(pw.str() == "8");
    auto pts = hilbert_polynomial(points_ideal(3, 2));
    CHECK(pts.str() == "2");
}

TEST_CASE("gotzmann number via the greedy binomial expansion") {
    CHECK(gotzmann_number(hilbert_polynomial(j1())) == 6);
    CHECK(gotzmann_number(hilbert_polynomial(ideal("x2^3, x1*x2^2, x1^2*x2, x1^5", 3))) == 8);
    CHECK(gotzmann_number(HilbertPolynomial::constant(Rational(5))) == 5);
    CHECK(gotzmann_number(HilbertPolynomial()) == 0);
    // t^2 has negative leading remainder after C(t+2,2)+...: not admissible
    CHECK_THROWS_AS(gotzmann_number(HilbertPolynomial({Rational(0), Rational(0), Rational(1)})),
                    DomainError);
}
