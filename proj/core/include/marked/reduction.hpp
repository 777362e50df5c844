#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "marked/marked_set.hpp"

namespace marked {

/// Which monomial of Supp(h) inside the target ideal a reduction step
/// eliminates. Results are strategy-independent (the strongly reduced
/// form is unique); LexGreatest is the deterministic default.
enum class Selection { LexGreatest, LexLeast };

/// h is strongly reduced iff no monomial of its support is divisible by
/// a minimal generator of the saturation (equivalently, h is
/// J_sat-reduced).
bool is_strongly_reduced(const XPoly& h, const StronglyStableIdeal& j_sat);

struct SmTraceEntry {
    Monomial replaced;   ///< the support monomial that was eliminated
    Monomial head_used;  ///< head of the marked polynomial applied
    Monomial cofactor;   ///< x^e with replaced * x0^lift = head_used * x^e
    int lift;            ///< extra x0 power this step forced on the whole polynomial
};

/// One pass of the V_l reduction relation run to its J-reduced form:
/// while some support monomial lies in J, the selected one x^b with
/// x^b = x^a *_J x^d is replaced through x^d f_a. Needs a full marked
/// set and a homogeneous input; the relation is Noetherian for strongly
/// stable J. The output support lies in the sous-escalier of J. Steps
/// are appended to `trace` when given (lift is always 0 here).
XPoly v_reduce(const XPoly& h, const MarkedSet& g, Selection sel = Selection::LexGreatest,
               std::vector<SmTraceEntry>* trace = nullptr);

struct SmStepResult {
    XPoly next;
    int lift = 0;
    SmTraceEntry entry;
};

/// One step of the superminimal reduction: selects a support monomial
/// x^g inside the saturation, decomposes x^g = x^u *_Jsat x^e over the
/// saturation, and rewrites through the superminimal polynomial whose
/// dehomogenized head is x^u. When that head carries more x0 than x^g
/// offers, the whole polynomial is first multiplied by the missing x0
/// power (reported as `lift`). Returns nullopt when no support monomial
/// lies in the saturation. `sg` must be a superminimal-flagged set.
std::optional<SmStepResult> sm_step(const XPoly& h, const MarkedSet& sg,
                                    Selection sel = Selection::LexGreatest);

struct SmOptions {
    long max_steps = 1'000'000;  ///< overridable; exhaustion means a non-truncation input
    int force_lift = 0;          ///< start from x0^force_lift * h (t-independence testing)
    bool keep_trace = false;
    Selection selection = Selection::LexGreatest;
};

struct SmReductionResult {
    int t = 0;      ///< total x0 power applied: x0^t * h reduces to `reduced`
    XPoly reduced;  ///< strongly reduced w.r.t. the saturation
    long steps = 0;
    std::optional<std::vector<SmTraceEntry>> trace;
};

/// Iterates sm_step with lazy x0-lifting until strongly reduced. For an
/// m-truncation the relation is Noetherian and the result unique; on
/// other ideals the step budget guards against cycles (BudgetExhausted).
SmReductionResult sm_reduce(const XPoly& h, const MarkedSet& sg, const SmOptions& opts = {});

/// Splits H = H' + x0^t * H'' where no monomial of H' is divisible by
/// x0^t; H'' is the quotient of the divisible part. Exact reassembly.
std::pair<XPoly, XPoly> x0_split(const XPoly& h, int t);

/// Smallest lift t such that x0^t * h reduces to a strongly reduced
/// polynomial without any further lifting. Exhaustive (tries t = 0, 1,
/// ...); meant for tests certifying the minimality statement behind
/// sm_reduce's lazily accumulated t.
int minimal_lift_exponent(const XPoly& h, const MarkedSet& sg, int t_upper);

}  // namespace marked
