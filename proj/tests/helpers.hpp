#pragma once

#include <random>
#include <vector>

#include "marked/io.hpp"
#include "marked/marked_set.hpp"

namespace testutil {

using namespace marked;

inline Monomial mono(const std::string& s, std::size_t nvars) {
    return parse_monomial(s, nvars);
}

inline StronglyStableIdeal ideal(const std::string& s, std::size_t nvars) {
    return parse_ideal(s, nvars);
}

// The four saturated ideals of the 4t / P^3 family.
inline StronglyStableIdeal j1() { return ideal("x3^2, x3*x2, x2^3", 4); }
inline StronglyStableIdeal j2() { return ideal("x3^2, x3*x2, x3*x1^2, x2^4", 4); }
inline StronglyStableIdeal j3() { return ideal("x3^2, x3*x2, x3*x1, x2^5, x2^4*x1", 4); }
inline StronglyStableIdeal j4() { return ideal("x3, x2^5, x2^4*x1^2", 4); }

// The 2-truncation of (x3, x2^2): the superminimal criterion alone is
// not enough on it.
inline StronglyStableIdeal nonbastano() {
    return ideal("x3^2, x3*x2, x3*x1, x3*x0, x2^2", 4);
}

// 2-truncation of (x2, x1^2) in three variables.
inline StronglyStableIdeal esempirid() { return ideal("x1^2, x0*x2, x1*x2, x2^2", 3); }

// Strongly stable but not an m-truncation; superminimal reduction cycles.
inline StronglyStableIdeal no_ssr() {
    return ideal("x2^3, x2^2*x1, x2*x1^2, x2^2*x0, x2*x1*x0, x1^4, x1^3*x0, x1^2*x0^2", 3);
}

// Lex-segment family (x_n, ..., x_2, x_1^mu).
inline StronglyStableIdeal points_ideal(std::size_t n, int mu) {
    std::vector<Monomial> gens;
    for (std::size_t v = 2; v <= n; ++v) gens.push_back(Monomial::variable(n + 1, v));
    Monomial x1_mu(n + 1);
    gens.push_back(x1_mu.times_variable(1, mu));
    return StronglyStableIdeal::from_generators(std::move(gens), n + 1);
}

// Marked set with every tail zero (the monomial ideal's own set).
inline MarkedSet monomial_set(const StronglyStableIdeal& j) {
    std::vector<MarkedPoly> polys;
    for (const auto& b : j.basis()) polys.push_back(MarkedPoly{b, XPoly{}});
    return MarkedSet(j, std::move(polys), false);
}

inline Rational random_small_rational(std::mt19937_64& rng) {
    static const int nums[] = {-3, -2, -1, 1, 2, 3};
    static const int dens[] = {1, 2, 3};
    std::uniform_int_distribution<int> ni(0, 5), di(0, 2);
    Rational q(nums[ni(rng)], dens[di(rng)]);
    q.canonicalize();
    return q;
}

// Random saturated strongly stable ideal: a union of Borel-closed
// degree-slices of x0-free monomials, minimalized.
inline StronglyStableIdeal random_saturated_ideal(std::mt19937_64& rng, std::size_t nvars,
                                                  int max_reg) {
    std::uniform_int_distribution<int> deg_dist(1, max_reg);
    std::uniform_int_distribution<int> count_dist(1, 2);
    std::vector<Monomial> gens;
    const int picks = count_dist(rng);
    for (int p = 0; p < picks; ++p) {
        const int d = deg_dist(rng);
        // random x0-free monomial of degree d
        std::vector<std::int32_t> e(nvars, 0);
        std::uniform_int_distribution<std::size_t> var_dist(1, nvars - 1);
        for (int k = 0; k < d; ++k) e[var_dist(rng)] += 1;
        const Monomial seed(e);
        // Borel closure within the degree: everything reachable upward
        for (const auto& x : monomials_of_degree(nvars, d))
            if (x[0] == 0 && borel_leq(seed, x)) gens.push_back(x);
    }
    if (gens.empty()) gens.push_back(Monomial::variable(nvars, nvars - 1));
    return StronglyStableIdeal::from_generators(std::move(gens), nvars);
}

// Random rational marked set over J: sparse small-rational tails.
inline MarkedSet random_marked_set(std::mt19937_64& rng, const StronglyStableIdeal& j,
                                   double density = 0.25) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<MarkedPoly> polys;
    for (const auto& b : j.basis()) {
        XPoly tail;
        for (const auto& g : complement(j, b.degree()))
            if (coin(rng) < density) tail.insert(g, ParamPoly::constant(random_small_rational(rng)));
        polys.push_back(MarkedPoly{b, std::move(tail)});
    }
    return MarkedSet(j, std::move(polys), false);
}

}  // namespace testutil
