#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marked/reduction.hpp"

namespace marked {

enum class PairTag { AllPairs, EK, L1, L2 };

/// An S-polynomial pair with its multipliers: mult1 * head1 =
/// mult2 * head2 = lcm(head1, head2). For EK pairs mult1 is a single
/// variable x_j with x_j > min(head1); for L2 pairs (mult1, mult2) =
/// (x0, x_i).
struct PairKind {
    PairTag tag;
    Monomial head1;
    Monomial head2;
    Monomial mult1;
    Monomial mult2;
};

std::string to_string(PairTag tag);

/// S(f, g) = x^m1 f - x^m2 g with lcm multipliers; the head terms cancel
/// exactly. Heads must differ.
XPoly s_polynomial(const MarkedPoly& f, const MarkedPoly& g);

/// All unordered pairs of distinct elements, canonical order.
std::vector<PairKind> all_pairs(const MarkedSet& g);

/// Eliahou-Kervaire couples of a full marked set: one pair per (f_a, x_j)
/// with x_j > min(head(f_a)), the partner read off the *_J decomposition
/// of x_j * head(f_a). Indexes the minimal syzygies of J.
std::vector<PairKind> ek_pairs(const MarkedSet& g);

/// L1 pairs of a superminimal set: the EK couples of the saturation,
/// lifted to the superminimal polynomials (multipliers on the full heads).
std::vector<PairKind> l1_pairs(const MarkedSet& sg);

/// L2 pairs of a full set over an m-truncation: degree-m head pairs with
/// x_i * head2 = x0 * head1 where x_i is the least positive variable of
/// head1.
std::vector<PairKind> l2_pairs(const MarkedSet& g);

/// Verdict of a marked-basis check with its certificate: the canonically
/// first failing pair and the nonzero residual of its reduced
/// S-polynomial. For the superminimal checks `lift` is the x0 power
/// applied before reduction.
struct BasisCheckResult {
    bool ok = true;
    std::optional<PairKind> failing;
    XPoly residual;
    int lift = 0;

    explicit operator bool() const { return ok; }
};

enum class VPairMode { EK, AllPairs };
enum class SmPairMode { L1L2, EK, AllPairs };

/// Buchberger-like criterion through the V_l reduction: G is the marked
/// basis of the ideal it generates iff every (EK) S-polynomial V-reduces
/// to zero. Works for every strongly stable J, truncation or not.
BasisCheckResult check_marked_basis_v(const MarkedSet& g, VPairMode mode = VPairMode::EK,
                                      int threads = 1);

/// Buchberger-like criterion through the superminimal reduction: every
/// S-polynomial of the selected family must reduce to zero after a
/// suitable x0 lift. Requires an m-truncation ideal (DomainError
/// otherwise). The superminimal subset is extracted from G internally.
BasisCheckResult check_marked_basis_sm(const MarkedSet& g, SmPairMode mode = SmPairMode::L1L2,
                                       int threads = 1, long max_steps = 1'000'000);

}  // namespace marked
