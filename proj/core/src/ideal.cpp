#include "marked/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "marked/errors.hpp"

namespace marked {

StronglyStableIdeal StronglyStableIdeal::from_generators(std::vector<Monomial> gens,
                                                         std::size_t nvars) {
    if (gens.empty())
        throw std::invalid_argument("an ideal needs at least one generator");
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator variable count does not match the ambient ring");

    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Minimalize: a generator divisible by an earlier (lower-degree) one is redundant.
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) minimal.push_back(g);
    }

    StronglyStableIdeal j;
    j.nvars_ = nvars;
    j.basis_ = std::move(minimal);
    j.initial_degree_ = static_cast<int>(j.basis_.front().degree());
    j.regularity_ = static_cast<int>(j.basis_.back().degree());
    j.satiety_ = 0;
    for (const auto& g : j.basis_)
        if (g[0] > 0) j.satiety_ = std::max(j.satiety_, static_cast<int>(g.degree()));
    return j;
}

bool StronglyStableIdeal::contains(const Monomial& m) const {
    return std::any_of(basis_.begin(), basis_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::optional<StabilityViolation> strong_stability_violation(const StronglyStableIdeal& j) {
    for (const auto& g : j.basis()) {
        for (std::size_t i = 0; i < j.nvars(); ++i) {
            if (g[i] <= 0) continue;
            for (std::size_t k = i + 1; k < j.nvars(); ++k) {
                if (!j.contains(elementary_move_up(g, i, k)))
                    return StabilityViolation{g, i, k};
            }
        }
    }
    return std::nullopt;
}

bool is_strongly_stable(const StronglyStableIdeal& j) {
    return !strong_stability_violation(j).has_value();
}

StronglyStableIdeal saturation(const StronglyStableIdeal& j) {
    std::vector<Monomial> gens;
    gens.reserve(j.basis().size());
    for (const auto& g : j.basis()) gens.push_back(dehomogenize(g));
    return StronglyStableIdeal::from_generators(std::move(gens), j.nvars());
}

StronglyStableIdeal truncate(const StronglyStableIdeal& j_sat, int m) {
    if (m <= j_sat.initial_degree()) return j_sat;
    std::vector<Monomial> gens;
    for (const auto& x : monomials_of_degree(j_sat.nvars(), m))
        if (j_sat.contains(x)) gens.push_back(x);
    for (const auto& g : j_sat.basis())
        if (g.degree() > m) gens.push_back(g);
    return StronglyStableIdeal::from_generators(std::move(gens), j_sat.nvars());
}

std::optional<int> is_m_truncation(const StronglyStableIdeal& j) {
    int m = j.initial_degree();
    if (j == truncate(saturation(j), m)) return m;
    return std::nullopt;
}

std::vector<Monomial> superminimal_generators(const StronglyStableIdeal& j) {
    const auto sat = saturation(j);
    const std::set<Monomial, CanonicalLess> sat_basis(sat.basis().begin(), sat.basis().end());
    std::vector<Monomial> out;
    for (const auto& g : j.basis())
        if (sat_basis.count(dehomogenize(g))) out.push_back(g);
    return out;
}

std::vector<Monomial> complement(const StronglyStableIdeal& j, std::int64_t d) {
    std::vector<Monomial> out;
    for (auto& x : monomials_of_degree(j.nvars(), d))
        if (!j.contains(x)) out.push_back(std::move(x));
    return out;
}

StarDecomposition star_decompose(const StronglyStableIdeal& j, const Monomial& g) {
    const StarDecomposition* found = nullptr;
    StarDecomposition result{Monomial(0), Monomial(0)};
    int matches = 0;
    for (const auto& a : j.basis()) {
        if (!a.divides(g)) continue;
        Monomial eta = g / a;
        if (eta.is_one() || min_var(a) >= max_var(eta)) {
            ++matches;
            if (!found) {
                result = StarDecomposition{a, std::move(eta)};
                found = &result;
            }
#ifdef NDEBUG
            break;  // uniqueness holds for strongly stable ideals
#endif
        }
    }
    if (!found)
        throw DomainError("monomial " + to_string(g) + " is not in the ideal (or the ideal is "
                          "not strongly stable): no *_J decomposition exists");
    assert(matches == 1 && "*_J decomposition must be unique for strongly stable ideals");
    (void)matches;
    return result;
}

std::optional<int> rho(const StronglyStableIdeal& j_sat) {
    std::optional<int> r;
    for (const auto& g : j_sat.basis())
        if (g.nvars() > 1 && g[1] > 0)
            r = std::max(r.value_or(0), static_cast<int>(g.degree()));
    return r;
}

}  // namespace marked
