#include "marked/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "marked/detail/parallel.hpp"
#include "marked/errors.hpp"

namespace marked {

std::string to_string(PairTag tag) {
    switch (tag) {
        case PairTag::AllPairs: return "all";
        case PairTag::EK: return "EK";
        case PairTag::L1: return "L1";
        case PairTag::L2: return "L2";
    }
    return "?";
}

XPoly s_polynomial(const MarkedPoly& f, const MarkedPoly& g) {
    if (f.head == g.head)
        throw std::invalid_argument("S-polynomial needs distinct heads");
    const Monomial l = lcm(f.head, g.head);
    return f.poly().mono_mul(l / f.head) - g.poly().mono_mul(l / g.head);
}

namespace {

PairKind make_pair_kind(PairTag tag, const Monomial& h1, const Monomial& h2) {
    const Monomial l = lcm(h1, h2);
    return PairKind{tag, h1, h2, l / h1, l / h2};
}

// Pair order: degree ascending, Lex ascending within a degree, so that
// certificates pick e.g. the (f_{x3x1}, f_{x3x0}) couple before the
// (f_{x3^2}, f_{x3x0}) one.
bool mono_pair_order_less(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_less(a, b);
}

bool pair_canonical_less(const PairKind& a, const PairKind& b) {
    if (a.head1 != b.head1) return mono_pair_order_less(a.head1, b.head1);
    if (a.head2 != b.head2) return mono_pair_order_less(a.head2, b.head2);
    if (a.mult1 != b.mult1) return lex_less(a.mult1, b.mult1);
    return false;
}

void sort_pairs(std::vector<PairKind>& pairs) {
    std::sort(pairs.begin(), pairs.end(), pair_canonical_less);
}

}  // namespace

std::vector<PairKind> all_pairs(const MarkedSet& g) {
    std::vector<PairKind> out;
    const auto& polys = g.polys();
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t k = i + 1; k < polys.size(); ++k)
            out.push_back(make_pair_kind(PairTag::AllPairs, polys[i].head, polys[k].head));
    sort_pairs(out);
    return out;
}

std::vector<PairKind> ek_pairs(const MarkedSet& g) {
    if (g.superminimal())
        throw std::invalid_argument("ek_pairs needs a full marked set");
    const StronglyStableIdeal& j = g.ideal();
    std::vector<PairKind> out;
    for (const auto& f : g.polys()) {
        const std::size_t lo = min_var(f.head);
        for (std::size_t jv = lo + 1; jv < j.nvars(); ++jv) {
            const Monomial moved = f.head.times_variable(jv);
            auto [partner, eta] = star_decompose(j, moved);
            PairKind p{PairTag::EK, f.head, partner, Monomial::variable(j.nvars(), jv),
                       std::move(eta)};
            out.push_back(std::move(p));
        }
    }
    sort_pairs(out);
    return out;
}

std::vector<PairKind> l1_pairs(const MarkedSet& sg) {
    if (!sg.superminimal())
        throw std::invalid_argument("l1_pairs needs a superminimal set");
    const StronglyStableIdeal j_sat = saturation(sg.ideal());
    // Superminimal poly per saturated generator.
    std::vector<PairKind> out;
    auto full_head = [&](const Monomial& sat_gen) -> const Monomial& {
        for (const auto& f : sg.polys())
            if (dehomogenize(f.head) == sat_gen) return f.head;
        throw InternalError("missing superminimal head for " + to_string(sat_gen));
    };
    for (const auto& f : sg.polys()) {
        const Monomial sat_head = dehomogenize(f.head);
        const std::size_t lo = min_var(sat_head);
        for (std::size_t iv = lo + 1; iv < j_sat.nvars(); ++iv) {
            const Monomial moved = sat_head.times_variable(iv);
            auto [partner_sat, eta] = star_decompose(j_sat, moved);
            out.push_back(make_pair_kind(PairTag::L1, f.head, full_head(partner_sat)));
        }
    }
    sort_pairs(out);
    return out;
}

std::vector<PairKind> l2_pairs(const MarkedSet& g) {
    if (g.superminimal())
        throw std::invalid_argument("l2_pairs needs a full marked set");
    const int m = g.ideal().initial_degree();
    std::vector<PairKind> out;
    for (const auto& f : g.polys()) {
        const Monomial& a = f.head;
        if (a.degree() != m) continue;
        // least positive variable dividing the head
        std::size_t iv = 0;
        for (std::size_t v = 1; v < a.nvars(); ++v)
            if (a[v] > 0) {
                iv = v;
                break;
            }
        if (iv == 0) continue;
        const Monomial partner = a.times_variable(iv, -1).times_variable(0, +1);
        if (g.find(partner)) out.push_back(make_pair_kind(PairTag::L2, a, partner));
    }
    sort_pairs(out);
    return out;
}

namespace {

BasisCheckResult run_pairs_v(const MarkedSet& g, const std::vector<PairKind>& pairs,
                             int threads) {
    auto reduce_one = [&](std::size_t i) -> XPoly {
        const PairKind& p = pairs[i];
        XPoly s = g.at(p.head1).poly().mono_mul(p.mult1) - g.at(p.head2).poly().mono_mul(p.mult2);
        if (s.is_zero()) return s;
        return v_reduce(s, g);
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            XPoly r = reduce_one(i);
            if (!r.is_zero()) return BasisCheckResult{false, pairs[i], std::move(r), 0};
        }
        return BasisCheckResult{};
    }
    auto residuals = detail::parallel_transform(pairs.size(), threads, reduce_one);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!residuals[i].is_zero())
            return BasisCheckResult{false, pairs[i], std::move(residuals[i]), 0};
    return BasisCheckResult{};
}

}  // namespace

BasisCheckResult check_marked_basis_v(const MarkedSet& g, VPairMode mode, int threads) {
    if (g.superminimal())
        throw std::invalid_argument("check_marked_basis_v needs a full marked set");
    const auto pairs = (mode == VPairMode::EK) ? ek_pairs(g) : all_pairs(g);
    return run_pairs_v(g, pairs, threads);
}

BasisCheckResult check_marked_basis_sm(const MarkedSet& g, SmPairMode mode, int threads,
                                       long max_steps) {
    if (g.superminimal())
        throw std::invalid_argument("check_marked_basis_sm needs a full marked set");
    if (!is_m_truncation(g.ideal()))
        throw DomainError("the superminimal criteria need an m-truncation ideal");
    const MarkedSet sg = g.superminimal_subset();

    std::vector<PairKind> pairs;
    switch (mode) {
        case SmPairMode::L1L2: {
            pairs = l1_pairs(sg);
            auto l2 = l2_pairs(g);
            pairs.insert(pairs.end(), l2.begin(), l2.end());
            sort_pairs(pairs);
            break;
        }
        case SmPairMode::EK: pairs = ek_pairs(g); break;
        case SmPairMode::AllPairs: pairs = all_pairs(g); break;
    }

    SmOptions opts;
    opts.max_steps = max_steps;
    auto reduce_one = [&](std::size_t i) -> SmReductionResult {
        const PairKind& p = pairs[i];
        XPoly s = g.at(p.head1).poly().mono_mul(p.mult1) - g.at(p.head2).poly().mono_mul(p.mult2);
        if (s.is_zero()) return SmReductionResult{};
        return sm_reduce(s, sg, opts);
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            SmReductionResult r = reduce_one(i);
            if (!r.reduced.is_zero())
                return BasisCheckResult{false, pairs[i], std::move(r.reduced), r.t};
        }
        return BasisCheckResult{};
    }
    auto results = detail::parallel_transform(pairs.size(), threads, reduce_one);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!results[i].reduced.is_zero())
            return BasisCheckResult{false, pairs[i], std::move(results[i].reduced), results[i].t};
    return BasisCheckResult{};
}

}  // namespace marked
