#include "marked/hilbert.hpp"

#include <stdexcept>

#include "marked/errors.hpp"

namespace marked {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::constant(Rational c) {
    if (c == 0) return HilbertPolynomial();
    return HilbertPolynomial({std::move(c)});
}

const Rational& HilbertPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational HilbertPolynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

HilbertPolynomial HilbertPolynomial::operator+(const HilbertPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return HilbertPolynomial(std::move(c));
}

HilbertPolynomial HilbertPolynomial::operator-(const HilbertPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return HilbertPolynomial(std::move(c));
}

std::string HilbertPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) s += to_string(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::int64_t hilbert_function(const StronglyStableIdeal& j, std::int64_t t) {
    if (t < 0) return 0;
    std::int64_t in_ideal = 0;
    for (const auto& x : monomials_of_degree(j.nvars(), t))
        if (j.contains(x)) ++in_ideal;
    return count_monomials_of_degree(j.nvars(), t) - in_ideal;
}

namespace {

// C(t + shift, d) as a polynomial in t.
HilbertPolynomial binomial_poly(int d, std::int64_t shift) {
    std::vector<Rational> c{Rational(1)};
    for (int k = 0; k < d; ++k) {
        // multiply by (t + shift - k)
        std::vector<Rational> next(c.size() + 1, Rational(0));
        Rational a(shift - k);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] += c[i] * a;
        }
        c = std::move(next);
    }
    Rational fact(1);
    for (int k = 2; k <= d; ++k) fact *= k;
    for (auto& q : c) q /= fact;
    return HilbertPolynomial(std::move(c));
}

}  // namespace

HilbertPolynomial hilbert_polynomial(const StronglyStableIdeal& j) {
    const int n_plus_1 = static_cast<int>(j.nvars());
    const std::int64_t t0 = j.regularity();
    const int points = n_plus_1 + 1;  // enough for degree <= n

    // Lagrange interpolation through (t0 + i, HF(t0 + i)).
    HilbertPolynomial p;
    for (int i = 0; i < points; ++i) {
        Rational yi(hilbert_function(j, t0 + i));
        if (yi == 0) continue;
        HilbertPolynomial basis({Rational(1)});
        Rational denom(1);
        for (int k = 0; k < points; ++k) {
            if (k == i) continue;
            // basis *= (t - (t0 + k))
            std::vector<Rational> c(basis.coefficients());
            std::vector<Rational> next(c.size() + 1, Rational(0));
            Rational shift(-(t0 + k));
            for (std::size_t q = 0; q < c.size(); ++q) {
                next[q + 1] += c[q];
                next[q] += c[q] * shift;
            }
            basis = HilbertPolynomial(std::move(next));
            denom *= Rational(i - k);
        }
        std::vector<Rational> scaled(basis.coefficients());
        for (auto& q : scaled) q = q * yi / denom;
        p = p + HilbertPolynomial(std::move(scaled));
    }

    const std::int64_t t_check = t0 + points;
    if (p(t_check) != Rational(hilbert_function(j, t_check)))
        throw InternalError("Hilbert polynomial interpolation failed its verification point");
    return p;
}

std::int64_t gotzmann_number(const HilbertPolynomial& p) {
    HilbertPolynomial rem = p;
    std::int64_t r = 0;
    std::int64_t k = 1;
    const std::int64_t budget = 1'000'000;
    while (!rem.is_zero()) {
        const int d = rem.degree();
        if (rem.leading_coefficient() <= 0)
            throw DomainError("not an admissible Hilbert polynomial: " + p.str());
        if (d == 0) {
            const Rational& c = rem.coefficients()[0];
            if (!is_integer(c))
                throw DomainError("not an admissible Hilbert polynomial: " + p.str());
            return r + c.get_num().get_si();
        }
        rem = rem - binomial_poly(d, d - (k - 1));
        if (rem.degree() > d)
            throw InternalError("Gotzmann expansion increased the remainder degree");
        ++r;
        if (++k > budget)
            throw DomainError("not an admissible Hilbert polynomial: " + p.str());
    }
    return r;
}

}  // namespace marked
