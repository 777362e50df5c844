#include "marked/parampoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "marked/errors.hpp"

namespace marked {

ParamTable::ParamTable(std::vector<Parameter> params) : params_(std::move(params)) {
    std::sort(params_.begin(), params_.end(), ParameterCanonicalBefore{});
    for (std::uint32_t i = 0; i < params_.size(); ++i)
        index_.emplace(std::make_pair(to_string(params_[i].head), to_string(params_[i].tail)), i);
    if (index_.size() != params_.size())
        throw InternalError("duplicate parameter in table");
}

std::optional<std::uint32_t> ParamTable::find(const Monomial& head, const Monomial& tail) const {
    auto it = index_.find(std::make_pair(to_string(head), to_string(tail)));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t power_product_degree(const PowerProduct& p) {
    std::int64_t d = 0;
    for (const auto& [idx, e] : p) d += e;
    return d;
}

int power_product_cmp(const PowerProduct& a, const PowerProduct& b) {
    const auto da = power_product_degree(a), db = power_product_degree(b);
    if (da != db) return da > db ? 1 : -1;
    // Lex by ascending parameter index: the first position where the
    // exponent vectors differ decides; more weight on an earlier index wins.
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i].first != b[k].first) return a[i].first < b[k].first ? 1 : -1;
        if (a[i].second != b[k].second) return a[i].second > b[k].second ? 1 : -1;
        ++i;
        ++k;
    }
    if (i < a.size()) return 1;
    if (k < b.size()) return -1;
    return 0;
}

// Terms live in a flat vector sorted descending by the term order; the
// merge-based arithmetic below preserves that invariant and never
// stores a zero coefficient.

ParamPoly ParamPoly::constant(Rational c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace_back(PowerProduct{}, std::move(c));
    return p;
}

ParamPoly ParamPoly::parameter(std::uint32_t index) {
    ParamPoly p;
    p.terms_.emplace_back(PowerProduct{{index, 1}}, Rational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.empty());
}

const std::pair<PowerProduct, Rational>& ParamPoly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.front();
}

std::int64_t ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return power_product_degree(terms_.front().first);
}

ParamPoly ParamPoly::merge(const ParamPoly& a, const ParamPoly& b, bool negate_b) {
    ParamPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, k = 0;
    while (i < a.terms_.size() && k < b.terms_.size()) {
        const int c = power_product_cmp(a.terms_[i].first, b.terms_[k].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[k]);
            if (negate_b) r.terms_.back().second = -r.terms_.back().second;
            ++k;
        } else {
            Rational sum = negate_b ? Rational(a.terms_[i].second - b.terms_[k].second)
                                    : Rational(a.terms_[i].second + b.terms_[k].second);
            if (sum != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(sum));
            ++i;
            ++k;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; k < b.terms_.size(); ++k) {
        r.terms_.push_back(b.terms_[k]);
        if (negate_b) r.terms_.back().second = -r.terms_.back().second;
    }
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const { return merge(*this, o, false); }

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return merge(*this, o, true); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

namespace {

PowerProduct multiply_products(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i].first < b[k].first)
            r.push_back(a[i++]);
        else if (a[i].first > b[k].first)
            r.push_back(b[k++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[k].second);
            ++i;
            ++k;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; k < b.size(); ++k) r.push_back(b[k]);
    return r;
}

}  // namespace

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    // multiply by the smaller operand term-by-term, merging partial rows
    const ParamPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const ParamPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
    ParamPoly acc;
    for (const auto& [ps, cs] : small.terms_) {
        ParamPoly row;
        row.terms_.reserve(big.terms_.size());
        for (const auto& [pb, cb] : big.terms_) {
            Rational prod = cs * cb;
            if (prod != 0) row.terms_.emplace_back(multiply_products(ps, pb), std::move(prod));
        }
        // multiplying by a fixed power product preserves the term order
        acc = merge(acc, row, false);
    }
    return acc;
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
    if (c == 0) return ParamPoly();
    ParamPoly r(*this);
    for (auto& [p, q] : r.terms_) q *= c;
    return r;
}

ParamPoly ParamPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / terms_.front().second);
}

Rational ParamPoly::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [p, c] : terms_) {
        Rational term = c;
        for (const auto& [idx, e] : p) {
            if (idx >= point.size()) throw std::invalid_argument("evaluation point too short");
            for (std::uint32_t k = 0; k < e; ++k) term *= point[idx];
        }
        acc += term;
    }
    return acc;
}

std::vector<Rational> ParamPoly::linear_part(std::size_t n_params) const {
    std::vector<Rational> row(n_params, Rational(0));
    for (const auto& [p, c] : terms_)
        if (p.size() == 1 && p[0].second == 1) row[p[0].first] = c;
    return row;
}

bool ParamPoly::has_constant_term() const {
    return !terms_.empty() && terms_.back().first.empty();
}

ParamPoly ParamPoly::substitute(const std::vector<std::optional<ParamPoly>>& subs) const {
    ParamPoly acc;
    for (const auto& [p, c] : terms_) {
        ParamPoly term = ParamPoly::constant(c);
        for (const auto& [idx, e] : p) {
            ParamPoly factor =
                (idx < subs.size() && subs[idx]) ? *subs[idx] : ParamPoly::parameter(idx);
            for (std::uint32_t k = 0; k < e; ++k) term = term * factor;
        }
        acc = acc + term;
    }
    return acc;
}

ParamPoly ParamPoly::remap(const std::vector<std::uint32_t>& index_map) const {
    ParamPoly r;
    for (const auto& [p, c] : terms_) {
        PowerProduct q;
        q.reserve(p.size());
        for (const auto& [idx, e] : p) {
            if (idx >= index_map.size()) throw std::invalid_argument("remap table too short");
            q.emplace_back(index_map[idx], e);
        }
        std::sort(q.begin(), q.end());
        ParamPoly one;
        one.terms_.emplace_back(std::move(q), c);
        r = merge(r, one, false);
    }
    return r;
}

std::string ParamPoly::str(const ParamTable& table) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        Rational a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (p.empty() || !unit) s += to_string(a);
        bool need_sep = p.empty() || !unit;
        for (const auto& [idx, e] : p) {
            if (need_sep) s += "*";
            need_sep = true;
            s += to_string(table[idx]);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

int parampoly_cmp(const ParamPoly& a, const ParamPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
        if (int c = power_product_cmp(ia->first, ib->first); c != 0) return c;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

std::string to_string(const Parameter& p) {
    return "C[" + to_string(p.head) + ", " + to_string(p.tail) + "]";
}

}  // namespace marked
