#include "marked/reduction.hpp"

#include <map>
#include <stdexcept>

#include "marked/errors.hpp"

namespace marked {

bool is_strongly_reduced(const XPoly& h, const StronglyStableIdeal& j_sat) {
    for (const auto& [m, c] : h.terms())
        if (j_sat.contains(m)) return false;
    return true;
}

namespace {

// Selected support monomial lying in `target`, or nullopt.
std::optional<Monomial> select_target(const XPoly& h, const StronglyStableIdeal& target,
                                      Selection sel) {
    if (sel == Selection::LexGreatest) {
        for (const auto& [m, c] : h.terms())
            if (target.contains(m)) return m;
    } else {
        for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it)
            if (target.contains(it->first)) return it->first;
    }
    return std::nullopt;
}

}  // namespace

XPoly v_reduce(const XPoly& h, const MarkedSet& g, Selection sel,
               std::vector<SmTraceEntry>* trace) {
    if (!h.is_homogeneous())
        throw std::invalid_argument("v_reduce needs a homogeneous input");
    if (g.superminimal())
        throw std::invalid_argument("v_reduce needs a full marked set");
    const StronglyStableIdeal& j = g.ideal();

    // Noetherian for strongly stable J; the cap only guards misuse.
    long guard = 100'000'000;
    XPoly cur = h;
    while (auto target = select_target(cur, j, sel)) {
        auto [gen, delta] = star_decompose(j, *target);
        const MarkedPoly& f = g.at(gen);
        ParamPoly c = cur.coeff(*target);
        // cur -= c * x^delta * f   (removes the target, adds c * x^delta * T(f))
        cur.sub_scaled_shifted(f.poly(), delta, c);
        if (trace) trace->push_back(SmTraceEntry{*target, gen, delta, 0});
        if (--guard == 0) throw InternalError("v_reduce failed to terminate");
    }
    return cur;
}

namespace {

struct SmContext {
    const MarkedSet& sg;
    StronglyStableIdeal j_sat;
    std::vector<XPoly> polys;  ///< head - tail per superminimal polynomial
    // dehomogenized head -> (poly index, x0 exponent of the full head)
    std::map<Monomial, std::pair<std::size_t, int>, LexLess> by_sat_head;

    explicit SmContext(const MarkedSet& sg_) : sg(sg_), j_sat(saturation(sg_.ideal())) {
        polys.reserve(sg.polys().size());
        for (std::size_t i = 0; i < sg.polys().size(); ++i) {
            const Monomial& head = sg.polys()[i].head;
            by_sat_head.emplace(dehomogenize(head), std::make_pair(i, head[0]));
            polys.push_back(sg.polys()[i].poly());
        }
    }

    // One rewriting step applied to the working polynomial; lifts the
    // whole polynomial by the missing x0 power first when needed.
    std::optional<SmTraceEntry> step_inplace(XPoly& work, Selection sel) const {
        auto target = select_target(work, j_sat, sel);
        if (!target) return std::nullopt;
        auto [sat_gen, eta] = star_decompose(j_sat, *target);
        auto it = by_sat_head.find(sat_gen);
        if (it == by_sat_head.end())
            throw InternalError("saturated generator " + to_string(sat_gen) +
                                " has no superminimal polynomial; sB_J is incomplete");
        const auto [poly_index, t_head] = it->second;
        const MarkedPoly& f = sg.polys()[poly_index];

        const int avail = (*target)[0];
        const int lift = t_head > avail ? t_head - avail : 0;
        Monomial gamma = *target;
        if (lift > 0) {
            const Monomial x0_lift =
                Monomial(work.terms().begin()->first.nvars()).times_variable(0, lift);
            work = work.mono_mul(x0_lift);
            gamma = gamma * x0_lift;
        }
        ParamPoly c = work.coeff(gamma);
        const Monomial eps = gamma / f.head;
        work.sub_scaled_shifted(polys[poly_index], eps, c);
        return SmTraceEntry{*target, f.head, eps, lift};
    }
};

}  // namespace

std::optional<SmStepResult> sm_step(const XPoly& h, const MarkedSet& sg, Selection sel) {
    if (!sg.superminimal())
        throw std::invalid_argument("sm_step needs a superminimal-flagged set");
    XPoly work = h;
    auto entry = SmContext(sg).step_inplace(work, sel);
    if (!entry) return std::nullopt;
    return SmStepResult{std::move(work), entry->lift, *entry};
}

SmReductionResult sm_reduce(const XPoly& h, const MarkedSet& sg, const SmOptions& opts) {
    if (!sg.superminimal())
        throw std::invalid_argument("sm_reduce needs a superminimal-flagged set");
    if (!h.is_homogeneous())
        throw std::invalid_argument("sm_reduce needs a homogeneous input");

    const SmContext ctx(sg);
    SmReductionResult res;
    res.reduced = h;
    res.t = opts.force_lift;
    if (opts.force_lift > 0 && !h.is_zero()) {
        const Monomial x0_lift =
            Monomial(h.terms().begin()->first.nvars()).times_variable(0, opts.force_lift);
        res.reduced = res.reduced.mono_mul(x0_lift);
    }
    if (opts.keep_trace) res.trace.emplace();

    while (auto entry = ctx.step_inplace(res.reduced, opts.selection)) {
        res.t += entry->lift;
        if (opts.keep_trace) res.trace->push_back(*entry);
        if (++res.steps >= opts.max_steps)
            throw BudgetExhausted(
                "superminimal reduction exceeded its step budget; the ideal is "
                "presumably not an m-truncation (the relation need not be Noetherian)",
                res.steps);
    }
    return res;
}

std::pair<XPoly, XPoly> x0_split(const XPoly& h, int t) {
    if (t < 0) throw std::invalid_argument("x0_split needs t >= 0");
    XPoly h_prime, h_second;
    for (const auto& [m, c] : h.terms()) {
        if (m[0] >= t)
            h_second.insert(m.times_variable(0, -t), c);
        else
            h_prime.insert(m, c);
    }
    return {std::move(h_prime), std::move(h_second)};
}

int minimal_lift_exponent(const XPoly& h, const MarkedSet& sg, int t_upper) {
    const SmContext ctx(sg);
    for (int t = 0; t <= t_upper; ++t) {
        XPoly cur = h;
        if (t > 0 && !h.is_zero()) {
            const Monomial x0_lift =
                Monomial(h.terms().begin()->first.nvars()).times_variable(0, t);
            cur = cur.mono_mul(x0_lift);
        }
        bool stuck = false;
        long guard = 10'000'000;
        while (auto entry = ctx.step_inplace(cur, Selection::LexGreatest)) {
            if (entry->lift > 0) {  // needed more x0: this t is not enough
                stuck = true;
                break;
            }
            if (--guard == 0) throw InternalError("minimal_lift_exponent failed to terminate");
        }
        if (!stuck) return t;
    }
    throw DomainError("no lift up to " + std::to_string(t_upper) +
                      " yields a no-lift superminimal reduction");
}

}  // namespace marked
