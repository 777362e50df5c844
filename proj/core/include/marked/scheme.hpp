#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "marked/criteria.hpp"
#include "marked/hilbert.hpp"

namespace marked {

/// Which S-polynomial family feeds the defining equations. L1 is the
/// production default; the others exist for cross-validation (they
/// generate different sets cutting out the same scheme).
enum class PairFamily { L1, L1L2, EK, AllPairs };

std::string to_string(PairFamily f);

struct SchemeOptions {
    PairFamily family = PairFamily::L1;
    int threads = 1;
    int force_lift = 0;  ///< extra x0 lift in every completion (t-independence testing)
    long max_steps = 1'000'000;
};

struct SchemeStats {
    std::int64_t n_params = 0;
    std::int64_t n_equations = 0;
    std::int64_t n_equations_raw = 0;  ///< before normalization (zero drop / scaling / dedup)
    std::int64_t n_d1_raw = 0;
    std::int64_t n_d2_raw = 0;
    std::int64_t n_pairs = 0;
    std::int64_t reduction_steps = 0;
    std::int64_t elapsed_ms = 0;
};

/// Generators of the defining ideal of the marked scheme in the reduced
/// parameters C~, together with the completed marked set (heads the full
/// basis, tails over C~).
struct SchemeResult {
    StronglyStableIdeal ideal;
    int m = 0;
    std::shared_ptr<const ParamTable> params;
    std::vector<ParamPoly> equations;  ///< normalized: zero-free, monic, deduplicated, sorted
    MarkedSet completed;
    std::vector<ParamPoly> d1_raw;
    std::vector<ParamPoly> d2_raw;
    SchemeStats stats;
};

/// Completes the generic superminimal set to a full marked set: every
/// non-superminimal basis monomial is reduced through the superminimal
/// polynomials, the reduction splits as H' + x0^t H'', the tail of the
/// new polynomial is H'' and the x-coefficients of H' are the first
/// block of defining equations. Returns (completed set, that block).
std::pair<MarkedSet, std::vector<ParamPoly>> complete_generic_set(const StronglyStableIdeal& j,
                                                                  const SchemeOptions& opts = {});

/// The full computation: completion block plus the coefficients of the
/// reduced S-polynomials of the selected pair family, normalized.
/// Requires a strongly stable m-truncation (DomainError otherwise).
SchemeResult marked_scheme(const StronglyStableIdeal& j, const SchemeOptions& opts = {});

/// Generators of the defining ideal in the full parameter ring K[C]:
/// B holds the elimination equations C_{a,g} - phi_{a,g} (one per
/// non-superminimal tail coefficient), D1 and D2 are the reduced-ring
/// blocks reread in K[C].
struct FullEquations {
    std::shared_ptr<const ParamTable> full_params;
    std::shared_ptr<const ParamTable> tilde_params;
    std::vector<std::uint32_t> tilde_to_full;  ///< index map C~ -> C
    std::vector<ParamPoly> b;                  ///< in K[C]
    std::vector<ParamPoly> d1;                 ///< in K[C]
    std::vector<ParamPoly> d2;                 ///< in K[C]
};

FullEquations full_equations_AJ(const StronglyStableIdeal& j, const SchemeOptions& opts = {});

/// Dimension of the Zariski tangent space at the origin: parameter count
/// minus the exact rank of the linear parts of the equations.
std::int64_t tangent_dim_at_origin(const SchemeResult& result);

/// Identification of the level-(m-1) parameters inside the level-m ones:
/// a head of degree >= m maps identically, a degree-(m-1) head maps to
/// its x0 multiple with tails shifted by x0. `extra` collects the
/// level-m parameters with no preimage (tail not divisible by x0 on the
/// new heads).
struct TruncationMap {
    std::vector<std::pair<Parameter, Parameter>> identified;
    std::vector<Parameter> extra;
};

TruncationMap phi_embedding(const StronglyStableIdeal& j_sat, int m);

/// Whether the marked schemes at truncation levels m-1 and m are
/// isomorphic: the levels coincide as ideals, or no degree-(m+1)
/// generator of the saturated ideal is divisible by x1.
bool is_truncation_isomorphism(const StronglyStableIdeal& j_sat, int m);

/// The row of invariants behind the embedding bound: regularity, basis
/// size, rho-1 (no x1-divisible generator reads as "none", printed -1),
/// the bound sigma * p(reg) and the actual reduced parameter count at
/// level rho-1 (at the saturated ideal itself when rho is undefined or
/// rho-1 falls below the initial degree).
struct EmbeddingReport {
    int regularity = 0;
    std::int64_t sigma = 0;
    std::optional<int> rho;
    HilbertPolynomial p;
    std::int64_t gotzmann = 0;
    std::int64_t bound = 0;           ///< sigma * p(regularity)
    std::int64_t n_tilde_params = 0;  ///< |C~^[rho-1]|
    int level = 0;                    ///< the truncation level actually used
};

EmbeddingReport embedding_report(const StronglyStableIdeal& j_sat);

/// Seeded soundness/completeness sampling: the origin, one single-
/// parameter perturbation per parameter, and `n_dense` dense points with
/// small-denominator rationals. A point satisfying every equation must
/// specialize the completed set to a marked basis (V criterion) and a
/// violating point must not.
struct SampleReport {
    std::int64_t n_points = 0;
    std::int64_t n_on_scheme = 0;
    std::int64_t n_off_scheme = 0;
    bool sound = true;     ///< every on-scheme sample passed the V criterion
    bool complete = true;  ///< every off-scheme sample failed it
};

SampleReport sample_check(const SchemeResult& result, std::uint64_t seed, int n_dense = 1);

}  // namespace marked
