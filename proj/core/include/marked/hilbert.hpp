#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "marked/ideal.hpp"
#include "marked/rational.hpp"

namespace marked {

/// Polynomial in one variable t with exact rational coefficients,
/// ascending by power. Hilbert polynomials take integer values on
/// integers but may have non-integer coefficients.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> coeffs);

    static HilbertPolynomial constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading_coefficient() const;

    Rational operator()(const Rational& t) const;
    Rational operator()(std::int64_t t) const { return (*this)(Rational(t)); }

    HilbertPolynomial operator+(const HilbertPolynomial& o) const;
    HilbertPolynomial operator-(const HilbertPolynomial& o) const;

    bool operator==(const HilbertPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// "4*t", "8", "1/2*t^2 + 3/2*t + 1" (descending powers).
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Hilbert function of S/J: the number of degree-t monomials outside J.
std::int64_t hilbert_function(const StronglyStableIdeal& j, std::int64_t t);

/// Hilbert polynomial of S/J by exact Lagrange interpolation on the n+2
/// values at degrees regularity .. regularity+n+1, verified against one
/// further value (InternalError on mismatch: that is a bug, not an input
/// problem). Requires J strongly stable.
HilbertPolynomial hilbert_polynomial(const StronglyStableIdeal& j);

/// Gotzmann number of an admissible Hilbert polynomial: the number of
/// terms of its Gotzmann (Macaulay) binomial representation
///   p(t) = C(t+a1, a1) + C(t+a2-1, a2) + ... + C(t+as-(s-1), as),
/// a1 >= a2 >= ... >= as >= 0, computed greedily. Throws DomainError if
/// p is not an admissible Hilbert polynomial.
std::int64_t gotzmann_number(const HilbertPolynomial& p);

}  // namespace marked
