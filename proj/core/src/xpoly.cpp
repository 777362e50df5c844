#include "marked/xpoly.hpp"

namespace marked {

XPoly XPoly::monomial(const Monomial& m, ParamPoly c) {
    XPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

std::int64_t XPoly::x_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
}

bool XPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

ParamPoly XPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
}

void XPoly::insert(const Monomial& m, ParamPoly c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, std::move(c));
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(m, -c);
        if (!inserted) {
            it->second = it->second - c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

XPoly XPoly::scale(const ParamPoly& c) const {
    XPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, q] : terms_) {
        ParamPoly prod = q * c;
        if (!prod.is_zero()) r.terms_.emplace(m, std::move(prod));
    }
    return r;
}

XPoly XPoly::mono_mul(const Monomial& m) const {
    XPoly r;
    for (const auto& [x, c] : terms_) r.terms_.emplace(x * m, c);
    return r;
}

void XPoly::sub_scaled_shifted(const XPoly& p, const Monomial& shift, const ParamPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [m, q] : p.terms_) {
        auto [it, inserted] = terms_.try_emplace(m * shift);
        it->second = it->second - q * c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string XPoly::str(const ParamTable* table) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (c.is_constant()) {
            const Rational q = c.terms().begin()->second;
            Rational a = abs(q);
            if (s.empty()) {
                if (q < 0) s += "-";
            } else {
                s += (q < 0) ? " - " : " + ";
            }
            if (a != 1 || m.is_one()) {
                s += to_string(a);
                if (!m.is_one()) s += "*";
            }
            if (!m.is_one()) s += to_string(m);
        } else {
            if (!s.empty()) s += " + ";
            s += "(";
            s += table ? c.str(*table) : std::string("<param>");
            s += ")";
            if (!m.is_one()) {
                s += "*";
                s += to_string(m);
            }
        }
    }
    return s;
}

}  // namespace marked
