#pragma once

#include <map>
#include <memory>
#include <vector>

#include "marked/ideal.hpp"
#include "marked/xpoly.hpp"

namespace marked {

/// Marked polynomial f = head - tail with Supp(tail) in the
/// sous-escalier of the ambient ideal, all of the head's degree.
struct MarkedPoly {
    Monomial head;
    XPoly tail;

    /// head - tail as an XPoly.
    XPoly poly() const;
};

/// A set of marked polynomials whose heads are exactly the basis of the
/// ideal (full set) or exactly its superminimal generators
/// (superminimal-flagged). Polys kept in canonical head order.
/// Immutable after construction; shared freely between threads.
class MarkedSet {
public:
    MarkedSet(StronglyStableIdeal ideal, std::vector<MarkedPoly> polys, bool superminimal,
              std::shared_ptr<const ParamTable> params = nullptr);

    const StronglyStableIdeal& ideal() const { return ideal_; }
    const std::vector<MarkedPoly>& polys() const { return polys_; }
    bool superminimal() const { return superminimal_; }
    const std::shared_ptr<const ParamTable>& params() const { return params_; }

    const MarkedPoly* find(const Monomial& head) const;
    const MarkedPoly& at(const Monomial& head) const;

    /// The superminimal subset of a full set, sharing the parameter table.
    MarkedSet superminimal_subset() const;

private:
    StronglyStableIdeal ideal_;
    std::vector<MarkedPoly> polys_;
    bool superminimal_ = false;
    std::shared_ptr<const ParamTable> params_;
    std::map<Monomial, std::size_t, CanonicalLess> by_head_;
};

/// The generic marked set: one F_a = x^a - sum C_{a,g} x^g per basis
/// element, with g running over the degree-|a| sous-escalier. The
/// parameter count is sum_a |N(J)_{|a|}|.
MarkedSet generic_marked_set(const StronglyStableIdeal& j);

/// The generic superminimal set over the reduced parameters C~; heads
/// are the superminimal generators only. Requires J to be an
/// m-truncation (DomainError otherwise).
MarkedSet generic_superminimal_set(const StronglyStableIdeal& j);

/// Evaluates every tail coefficient at the assignment (indexed like the
/// set's parameter table). The result has constant coefficients and no
/// parameter table. Throws std::invalid_argument when the set carries no
/// table or the assignment has the wrong size.
MarkedSet specialize(const MarkedSet& set, const std::vector<Rational>& assignment);

/// Assignment map keyed by (head, tail); every parameter of the set must
/// be present.
MarkedSet specialize(const MarkedSet& set,
                     const std::map<std::pair<std::string, std::string>, Rational>& assignment);

}  // namespace marked
