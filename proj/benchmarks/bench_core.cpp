#include <benchmark/benchmark.h>

#include "marked/criteria.hpp"
#include "marked/io.hpp"
#include "marked/oracle.hpp"
#include "marked/scheme.hpp"

using namespace marked;

namespace {

StronglyStableIdeal j1() { return parse_ideal("x3^2, x3*x2, x2^3"); }
StronglyStableIdeal j2_t2() { return truncate(parse_ideal("x3^2, x3*x2, x3*x1^2, x2^4"), 2); }
StronglyStableIdeal j3_t4() {
    return truncate(parse_ideal("x3^2, x3*x2, x3*x1, x2^5, x2^4*x1"), 4);
}

void BM_borel_compare(benchmark::State& state) {
    const auto monos = monomials_of_degree(4, 6);
    for (auto _ : state) {
        for (std::size_t i = 0; i + 1 < monos.size(); i += 2)
            benchmark::DoNotOptimize(borel_compare(monos[i], monos[i + 1]));
    }
}
BENCHMARK(BM_borel_compare);

void BM_star_decompose(benchmark::State& state) {
    const auto j = j3_t4();
    std::vector<Monomial> in_ideal;
    for (const auto& m : monomials_of_degree(4, 7))
        if (j.contains(m)) in_ideal.push_back(m);
    for (auto _ : state) {
        for (const auto& m : in_ideal) benchmark::DoNotOptimize(star_decompose(j, m));
    }
    state.SetItemsProcessed(state.iterations() * in_ideal.size());
}
BENCHMARK(BM_star_decompose);

void BM_sm_reduce_generic(benchmark::State& state) {
    const auto j = j2_t2();
    const auto sg = generic_superminimal_set(j);
    const auto pairs = l1_pairs(sg);
    for (auto _ : state) {
        for (const auto& p : pairs) {
            XPoly s = sg.at(p.head1).poly().mono_mul(p.mult1) -
                      sg.at(p.head2).poly().mono_mul(p.mult2);
            benchmark::DoNotOptimize(sm_reduce(s, sg));
        }
    }
    state.SetItemsProcessed(state.iterations() * pairs.size());
}
BENCHMARK(BM_sm_reduce_generic);

void BM_marked_scheme_j1(benchmark::State& state) {
    const auto j = j1();
    for (auto _ : state) benchmark::DoNotOptimize(marked_scheme(j));
}
BENCHMARK(BM_marked_scheme_j1);

void BM_marked_scheme_j2(benchmark::State& state) {
    const auto j = j2_t2();
    for (auto _ : state) benchmark::DoNotOptimize(marked_scheme(j));
}
BENCHMARK(BM_marked_scheme_j2);

void BM_marked_scheme_j3_extended(benchmark::State& state) {
    const auto j = j3_t4();
    SchemeOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(marked_scheme(j, opts));
}
BENCHMARK(BM_marked_scheme_j3_extended)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_rank_oracle(benchmark::State& state) {
    const auto j = parse_ideal("x2, x1^2, x1*x0", 3);
    std::vector<MarkedPoly> polys;
    polys.push_back(MarkedPoly{parse_monomial("x2", 3),
                               XPoly::monomial(parse_monomial("x1", 3),
                                               ParamPoly::constant(Rational(-1)))});
    polys.push_back(MarkedPoly{parse_monomial("x1^2", 3), XPoly{}});
    polys.push_back(MarkedPoly{parse_monomial("x1*x0", 3), XPoly{}});
    const MarkedSet a1(j, std::move(polys), false);
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_rank_check(a1, default_rank_window(j)));
}
BENCHMARK(BM_rank_oracle);

void BM_check_basis_v(benchmark::State& state) {
    const auto j = j2_t2();
    std::vector<MarkedPoly> polys;
    for (const auto& b : j.basis()) polys.push_back(MarkedPoly{b, XPoly{}});
    const MarkedSet g(j, std::move(polys), false);
    for (auto _ : state) benchmark::DoNotOptimize(check_marked_basis_v(g));
}
BENCHMARK(BM_check_basis_v);

}  // namespace

BENCHMARK_MAIN();
