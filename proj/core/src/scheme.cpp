#include "marked/scheme.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "marked/detail/linalg.hpp"
#include "marked/detail/parallel.hpp"
#include "marked/errors.hpp"

namespace marked {

std::string to_string(PairFamily f) {
    switch (f) {
        case PairFamily::L1: return "l1";
        case PairFamily::L1L2: return "l1l2";
        case PairFamily::EK: return "ek";
        case PairFamily::AllPairs: return "all";
    }
    return "?";
}

namespace {

std::vector<ParamPoly> x_coefficients(const XPoly& h) {
    std::vector<ParamPoly> out;
    out.reserve(h.term_count());
    for (const auto& [m, c] : h.terms()) out.push_back(c);
    return out;
}

std::vector<ParamPoly> normalize_equations(std::vector<ParamPoly> raw) {
    std::set<ParamPoly, ParamPolyLess> canon;
    for (auto& e : raw) {
        if (e.is_zero()) continue;
        canon.insert(e.monic());
    }
    return std::vector<ParamPoly>(canon.begin(), canon.end());
}

}  // namespace

std::pair<MarkedSet, std::vector<ParamPoly>> complete_generic_set(const StronglyStableIdeal& j,
                                                                  const SchemeOptions& opts) {
    const MarkedSet sg = generic_superminimal_set(j);

    std::vector<Monomial> to_complete;
    {
        std::set<Monomial, CanonicalLess> sb;
        for (const auto& f : sg.polys()) sb.insert(f.head);
        for (const auto& a : j.basis())
            if (!sb.count(a)) to_complete.push_back(a);
    }

    SmOptions smo;
    smo.max_steps = opts.max_steps;
    smo.force_lift = opts.force_lift;
    struct Completion {
        MarkedPoly poly{Monomial(0), XPoly{}};
        std::vector<ParamPoly> d1;
        long steps = 0;
    };
    auto completions =
        detail::parallel_transform(to_complete.size(), opts.threads, [&](std::size_t i) {
            const Monomial& a = to_complete[i];
            SmReductionResult r = sm_reduce(XPoly::monomial(a), sg, smo);
            auto [h_prime, h_second] = x0_split(r.reduced, r.t);
            Completion c;
            c.poly = MarkedPoly{a, std::move(h_second)};
            c.d1 = x_coefficients(h_prime);
            c.steps = r.steps;
            return c;
        });

    std::vector<MarkedPoly> polys(sg.polys());
    std::vector<ParamPoly> d1;
    for (auto& c : completions) {
        polys.push_back(std::move(c.poly));
        d1.insert(d1.end(), c.d1.begin(), c.d1.end());
    }
    MarkedSet completed(j, std::move(polys), /*superminimal=*/false, sg.params());
    return {std::move(completed), std::move(d1)};
}

SchemeResult marked_scheme(const StronglyStableIdeal& j, const SchemeOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    auto m = is_m_truncation(j);
    if (!m) throw DomainError("marked_scheme needs a strongly stable m-truncation ideal");

    auto [completed, d1] = complete_generic_set(j, opts);
    const MarkedSet sg = completed.superminimal_subset();

    std::vector<PairKind> pairs;
    switch (opts.family) {
        case PairFamily::L1: pairs = l1_pairs(sg); break;
        case PairFamily::L1L2: {
            pairs = l1_pairs(sg);
            auto l2 = l2_pairs(completed);
            pairs.insert(pairs.end(), l2.begin(), l2.end());
            break;
        }
        case PairFamily::EK: pairs = ek_pairs(completed); break;
        case PairFamily::AllPairs: pairs = all_pairs(completed); break;
    }

    SmOptions smo;
    smo.max_steps = opts.max_steps;
    struct PairOut {
        std::vector<ParamPoly> d2;
        long steps = 0;
    };
    auto outs = detail::parallel_transform(pairs.size(), opts.threads, [&](std::size_t i) {
        const PairKind& p = pairs[i];
        XPoly s = completed.at(p.head1).poly().mono_mul(p.mult1) -
                  completed.at(p.head2).poly().mono_mul(p.mult2);
        PairOut out;
        if (s.is_zero()) return out;
        SmReductionResult r = sm_reduce(s, sg, smo);
        out.d2 = x_coefficients(r.reduced);
        out.steps = r.steps;
        return out;
    });

    SchemeResult res{j,
                     *m,
                     completed.params(),
                     {},
                     std::move(completed),
                     std::move(d1),
                     {},
                     {}};
    for (auto& o : outs) {
        res.d2_raw.insert(res.d2_raw.end(), o.d2.begin(), o.d2.end());
        res.stats.reduction_steps += o.steps;
    }

    std::vector<ParamPoly> raw(res.d1_raw);
    raw.insert(raw.end(), res.d2_raw.begin(), res.d2_raw.end());
    res.equations = normalize_equations(std::move(raw));

    res.stats.n_params = static_cast<std::int64_t>(res.params->size());
    res.stats.n_equations = static_cast<std::int64_t>(res.equations.size());
    res.stats.n_d1_raw = static_cast<std::int64_t>(res.d1_raw.size());
    res.stats.n_d2_raw = static_cast<std::int64_t>(res.d2_raw.size());
    res.stats.n_equations_raw = res.stats.n_d1_raw + res.stats.n_d2_raw;
    res.stats.n_pairs = static_cast<std::int64_t>(pairs.size());
    res.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return res;
}

FullEquations full_equations_AJ(const StronglyStableIdeal& j, const SchemeOptions& opts) {
    SchemeResult r = marked_scheme(j, opts);
    const MarkedSet generic = generic_marked_set(j);

    FullEquations out;
    out.full_params = generic.params();
    out.tilde_params = r.params;
    out.tilde_to_full.reserve(r.params->size());
    for (const auto& p : r.params->parameters()) {
        auto idx = out.full_params->find(p.head, p.tail);
        if (!idx) throw InternalError("reduced parameter missing from the full table");
        out.tilde_to_full.push_back(*idx);
    }

    // B: x-coefficients of T(F_a) - H''_a; zero for superminimal heads.
    for (const auto& f : generic.polys()) {
        const MarkedPoly& completed_f = r.completed.at(f.head);
        XPoly remapped_tail;
        for (const auto& [mono, c] : completed_f.tail.terms())
            remapped_tail.insert(mono, c.remap(out.tilde_to_full));
        XPoly b_poly = f.tail - remapped_tail;
        for (auto& c : x_coefficients(b_poly)) out.b.push_back(std::move(c));
    }

    for (const auto& e : r.d1_raw) out.d1.push_back(e.remap(out.tilde_to_full));
    for (const auto& e : r.d2_raw) out.d2.push_back(e.remap(out.tilde_to_full));
    return out;
}

std::int64_t tangent_dim_at_origin(const SchemeResult& result) {
    const std::size_t n = result.params->size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(result.equations.size());
    for (const auto& e : result.equations) {
        auto row = e.linear_part(n);
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; }))
            rows.push_back(std::move(row));
    }
    return static_cast<std::int64_t>(n) -
           static_cast<std::int64_t>(detail::rational_matrix_rank(rows));
}

TruncationMap phi_embedding(const StronglyStableIdeal& j_sat, int m) {
    if (m < 1) throw std::invalid_argument("phi_embedding needs m >= 1");
    if (!j_sat.is_saturated())
        throw DomainError("phi_embedding needs a saturated ideal");
    const MarkedSet lo = generic_superminimal_set(truncate(j_sat, m - 1));
    const MarkedSet hi = generic_superminimal_set(truncate(j_sat, m));
    const ParamTable& lo_t = *lo.params();
    const ParamTable& hi_t = *hi.params();

    TruncationMap map;
    std::vector<bool> hit(hi_t.size(), false);
    for (const auto& p : lo_t.parameters()) {
        Parameter q = p;
        if (p.head.degree() == m - 1) {
            q.head = p.head.times_variable(0);
            q.tail = p.tail.times_variable(0);
        }
        auto idx = hi_t.find(q.head, q.tail);
        if (!idx)
            throw InternalError("level-" + std::to_string(m - 1) + " parameter " + to_string(p) +
                                " has no image at level " + std::to_string(m));
        hit[*idx] = true;
        map.identified.emplace_back(p, hi_t[*idx]);
    }
    for (std::size_t i = 0; i < hi_t.size(); ++i)
        if (!hit[i]) map.extra.push_back(hi_t[i]);
    return map;
}

bool is_truncation_isomorphism(const StronglyStableIdeal& j_sat, int m) {
    if (m < 1) throw std::invalid_argument("is_truncation_isomorphism needs m >= 1");
    if (truncate(j_sat, m - 1) == truncate(j_sat, m)) return true;
    for (const auto& g : j_sat.basis())
        if (g.degree() == m + 1 && g.nvars() > 1 && g[1] > 0) return false;
    return true;
}

EmbeddingReport embedding_report(const StronglyStableIdeal& j_sat) {
    if (!j_sat.is_saturated())
        throw DomainError("embedding_report needs a saturated ideal");
    EmbeddingReport rep;
    rep.regularity = j_sat.regularity();
    rep.sigma = static_cast<std::int64_t>(j_sat.basis().size());
    rep.rho = rho(j_sat);
    rep.p = hilbert_polynomial(j_sat);
    rep.gotzmann = gotzmann_number(rep.p);
    const Rational bound = rep.p(rep.regularity) * rep.sigma;
    if (!is_integer(bound)) throw InternalError("sigma * p(reg) must be an integer");
    rep.bound = bound.get_num().get_si();

    const StronglyStableIdeal level_ideal = rep.rho ? truncate(j_sat, *rep.rho - 1) : j_sat;
    rep.level = level_ideal.initial_degree();
    for (const auto& a : superminimal_generators(level_ideal))
        rep.n_tilde_params += static_cast<std::int64_t>(complement(level_ideal, a.degree()).size());
    if (rep.n_tilde_params > rep.bound)
        throw InternalError("parameter count exceeded the embedding bound");
    return rep;
}

SampleReport sample_check(const SchemeResult& result, std::uint64_t seed, int n_dense) {
    const std::size_t n = result.params->size();
    std::mt19937_64 rng(seed);
    auto small_rational = [&]() {
        static const int nums[] = {-3, -2, -1, 1, 2, 3};
        static const int dens[] = {1, 2, 3};
        std::uniform_int_distribution<int> ni(0, 5), di(0, 2);
        Rational q(nums[ni(rng)], dens[di(rng)]);
        q.canonicalize();
        return q;
    };

    std::vector<std::vector<Rational>> points;
    points.emplace_back(n, Rational(0));  // the origin: always on the scheme
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> p(n, Rational(0));
        p[i] = small_rational();
        points.push_back(std::move(p));
    }
    for (int d = 0; d < n_dense; ++d) {
        std::vector<Rational> p;
        p.reserve(n);
        for (std::size_t i = 0; i < n; ++i) p.push_back(small_rational());
        points.push_back(std::move(p));
    }

    SampleReport rep;
    for (const auto& point : points) {
        ++rep.n_points;
        bool on_scheme = std::all_of(result.equations.begin(), result.equations.end(),
                                     [&](const ParamPoly& e) { return e.eval(point) == 0; });
        const MarkedSet special = specialize(result.completed, point);
        const bool basis = check_marked_basis_v(special).ok;
        if (on_scheme) {
            ++rep.n_on_scheme;
            if (!basis) rep.sound = false;
        } else {
            ++rep.n_off_scheme;
            if (basis) rep.complete = false;
        }
    }
    return rep;
}

}  // namespace marked
