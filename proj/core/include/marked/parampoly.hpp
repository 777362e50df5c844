#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "marked/monomial.hpp"
#include "marked/rational.hpp"

namespace marked {

/// One coordinate of the parameter space: the coefficient C_{head,tail}
/// of `tail` in the tail of the marked polynomial with the given head.
/// deg(head) = deg(tail) and tail lies outside the ideal.
struct Parameter {
    Monomial head;
    Monomial tail;

    bool operator==(const Parameter& o) const { return head == o.head && tail == o.tail; }
};

/// Canonical parameter order: head degree descending, head Lex
/// descending, tail Lex descending. Fixes printing and the term order
/// of the parameter ring; index 0 is the canonically first (greatest)
/// parameter.
struct ParameterCanonicalBefore {
    bool operator()(const Parameter& a, const Parameter& b) const {
        auto da = a.head.degree(), db = b.head.degree();
        if (da != db) return da > db;
        if (auto c = lex_cmp(a.head, b.head); c != 0) return c > 0;
        return lex_greater(a.tail, b.tail);
    }
};

/// Immutable registry of the parameters of one generic marked set,
/// sorted canonically. ParamPoly terms refer to parameters by index.
class ParamTable {
public:
    explicit ParamTable(std::vector<Parameter> params);

    std::size_t size() const { return params_.size(); }
    const Parameter& operator[](std::size_t i) const { return params_[i]; }
    const std::vector<Parameter>& parameters() const { return params_; }

    std::optional<std::uint32_t> find(const Monomial& head, const Monomial& tail) const;

private:
    std::vector<Parameter> params_;
    std::map<std::pair<std::string, std::string>, std::uint32_t> index_;
};

/// Power product of parameters: (index, exponent) pairs, index ascending,
/// exponents positive. Empty = the constant power product 1.
using PowerProduct = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::int64_t power_product_degree(const PowerProduct& p);

/// Term order of the parameter ring: total degree first, then
/// lexicographically by parameter index (a higher exponent on a
/// canonically earlier parameter wins). Returns >0 if a > b.
int power_product_cmp(const PowerProduct& a, const PowerProduct& b);

struct PowerProductGreater {
    bool operator()(const PowerProduct& a, const PowerProduct& b) const {
        return power_product_cmp(a, b) > 0;
    }
};

/// Sparse polynomial in the parameters over the rationals: the
/// coefficient ring K[C] of everything. Terms kept in a flat vector,
/// descending in the canonical order, no zero coefficients; arithmetic
/// is merge-based. Immutable value type.
class ParamPoly {
public:
    using Term = std::pair<PowerProduct, Rational>;

    ParamPoly() = default;
    static ParamPoly constant(Rational c);
    static ParamPoly parameter(std::uint32_t index);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Leading (canonically greatest) term.
    const Term& leading_term() const;

    std::int64_t total_degree() const;  // -1 for zero

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const Rational& c) const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    /// Scaled so the leading coefficient is 1. Zero stays zero.
    ParamPoly monic() const;

    /// Exact evaluation at a full assignment (point[i] = value of
    /// parameter i).
    Rational eval(const std::vector<Rational>& point) const;

    /// Coefficient row of the degree-1 part: linear[i] = coefficient of
    /// parameter i. Constant and higher-degree terms are ignored.
    std::vector<Rational> linear_part(std::size_t n_params) const;
    bool has_constant_term() const;

    /// Substitutes parameter i by subs[i] wherever subs[i] is set.
    ParamPoly substitute(const std::vector<std::optional<ParamPoly>>& subs) const;

    /// Remaps parameter indices (for re-reading a C~ polynomial in the
    /// full C table). Every index must be mapped.
    ParamPoly remap(const std::vector<std::uint32_t>& index_map) const;

    std::string str(const ParamTable& table) const;

private:
    static ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool negate_b);

    std::vector<Term> terms_;
};

/// Total order on polynomials used for canonical equation lists:
/// compares term sequences (power product, then coefficient).
int parampoly_cmp(const ParamPoly& a, const ParamPoly& b);

struct ParamPolyLess {
    bool operator()(const ParamPoly& a, const ParamPoly& b) const {
        return parampoly_cmp(a, b) < 0;
    }
};

/// "C[x3*x0, x1^2]" (head, tail).
std::string to_string(const Parameter& p);

}  // namespace marked
