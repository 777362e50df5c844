#pragma once

#include <map>
#include <string>

#include "marked/monomial.hpp"
#include "marked/parampoly.hpp"

namespace marked {

/// Polynomial in the x variables with ParamPoly coefficients: an element
/// of K[C][x]. Terms keyed by monomial in Lex-descending order, zero
/// coefficients pruned. Specialized (constant-coefficient) polynomials
/// are the same type with constant ParamPoly entries.
class XPoly {
public:
    XPoly() = default;

    static XPoly monomial(const Monomial& m, ParamPoly c = ParamPoly::constant(Rational(1)));

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, ParamPoly, LexGreater>& terms() const { return terms_; }

    /// x-degree of the (homogeneous) polynomial; -1 when zero.
    std::int64_t x_degree() const;
    bool is_homogeneous() const;

    ParamPoly coeff(const Monomial& m) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator-() const;

    /// Multiplies every coefficient by c.
    XPoly scale(const ParamPoly& c) const;
    /// Shifts every support monomial by m.
    XPoly mono_mul(const Monomial& m) const;

    /// In-place fused update: *this -= c * x^shift * p. The one mutating
    /// operation, for the reduction inner loop; reducers apply it to
    /// their private working copy only.
    void sub_scaled_shifted(const XPoly& p, const Monomial& shift, const ParamPoly& c);

    bool operator==(const XPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    void insert(const Monomial& m, ParamPoly c);

    /// "x2*x1 - 3/2*x0^2" for constant coefficients, or
    /// "(C[...] + ...)*x2*x1 + ..." with a table.
    std::string str(const ParamTable* table = nullptr) const;

private:
    std::map<Monomial, ParamPoly, LexGreater> terms_;
};

}  // namespace marked
