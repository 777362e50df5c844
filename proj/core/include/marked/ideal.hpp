#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marked/monomial.hpp"

namespace marked {

/// Monomial ideal given by its minimal monomial basis, kept in canonical
/// order (degree ascending, Lex descending within a degree), so equality
/// of ideals is sequence equality of bases. Strong stability is NOT
/// enforced at construction; test it with is_strongly_stable().
/// Immutable after construction; safe for concurrent shared reads.
class StronglyStableIdeal {
public:
    /// Minimalizes (drops generators divisible by another) and sorts.
    /// Throws std::invalid_argument on an empty list or mismatched
    /// variable counts.
    static StronglyStableIdeal from_generators(std::vector<Monomial> gens, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& basis() const { return basis_; }

    /// Membership: some basis element divides m.
    bool contains(const Monomial& m) const;

    /// Max basis degree (the Castelnuovo-Mumford regularity when the
    /// ideal is strongly stable).
    int regularity() const { return regularity_; }
    /// Max degree of an x0-divisible basis element; 0 when none exist
    /// (i.e. the ideal is saturated).
    int satiety() const { return satiety_; }
    /// Min basis degree m_J.
    int initial_degree() const { return initial_degree_; }
    bool is_saturated() const { return satiety_ == 0; }

    bool operator==(const StronglyStableIdeal& o) const {
        return nvars_ == o.nvars_ && basis_ == o.basis_;
    }
    bool operator!=(const StronglyStableIdeal& o) const { return !(*this == o); }

private:
    StronglyStableIdeal() = default;

    std::size_t nvars_ = 0;
    std::vector<Monomial> basis_;
    int regularity_ = 0;
    int satiety_ = 0;
    int initial_degree_ = 0;
};

/// True iff every increasing elementary move applied to a basis element
/// lands in the ideal.
bool is_strongly_stable(const StronglyStableIdeal& j);

/// A witness that the ideal is not strongly stable: a basis element and
/// the increasing move (i -> j) that leaves the ideal. nullopt when
/// strongly stable.
struct StabilityViolation {
    Monomial generator;
    std::size_t from;
    std::size_t to;
};
std::optional<StabilityViolation> strong_stability_violation(const StronglyStableIdeal& j);

/// Ideal generated by the dehomogenized basis, minimalized. For strongly
/// stable J this is the saturation J^sat.
StronglyStableIdeal saturation(const StronglyStableIdeal& j);

/// Minimal basis of (j_sat)_{>= m}: all degree-m monomials of j_sat
/// together with the basis elements of degree > m. Returns j_sat
/// unchanged when m is at most its initial degree. j_sat must be
/// saturated strongly stable.
StronglyStableIdeal truncate(const StronglyStableIdeal& j_sat, int m);

/// The initial degree m when J equals the m-truncation of its own
/// saturation; nullopt otherwise. Saturated ideals are their own
/// truncation at the initial degree.
std::optional<int> is_m_truncation(const StronglyStableIdeal& j);

/// Superminimal generators sB_J: basis elements whose dehomogenization
/// is a minimal generator of the saturation. Canonical order.
std::vector<Monomial> superminimal_generators(const StronglyStableIdeal& j);

/// All degree-d monomials outside J (the sous-escalier in degree d),
/// Lex descending.
std::vector<Monomial> complement(const StronglyStableIdeal& j, std::int64_t d);

/// Unique factorization g = generator * cofactor with generator in the
/// basis and min(generator) >= max(cofactor) (or cofactor = 1).
struct StarDecomposition {
    Monomial generator;
    Monomial cofactor;
};

/// Eliahou-Kervaire decomposition of g in J. Requires g in J (DomainError
/// otherwise) and J strongly stable for existence; uniqueness is asserted
/// in debug builds.
StarDecomposition star_decompose(const StronglyStableIdeal& j, const Monomial& g);

/// Max degree among basis elements of j_sat with positive x1 exponent;
/// nullopt when no basis element is divisible by x1 (the CLI prints -1
/// for rho-1 in that case).
std::optional<int> rho(const StronglyStableIdeal& j_sat);

}  // namespace marked
