#include "marked/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace marked {

namespace {

void require_same_nvars(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial variable counts differ: " +
                                    std::to_string(a.nvars()) + " vs " +
                                    std::to_string(b.nvars()));
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars);
    m.exp_[i] = 1;
    return m;
}

std::int64_t Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::int32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_nvars(*this, o);
    std::vector<std::int32_t> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    require_same_nvars(*this, o);
    std::vector<std::int32_t> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= o.exp_[i];
        if (e[i] < 0) throw std::invalid_argument("monomial quotient is not exact");
    }
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    require_same_nvars(*this, o);
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > o.exp_[i]) return false;
    return true;
}

Monomial Monomial::times_variable(std::size_t i, std::int32_t k) const {
    if (i >= exp_.size()) throw std::invalid_argument("variable index out of range");
    Monomial m(*this);
    m.exp_[i] += k;
    if (m.exp_[i] < 0) throw std::invalid_argument("negative exponent");
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_nvars(a, b);
    std::vector<std::int32_t> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
    require_same_nvars(a, b);
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

BorelRel borel_compare(const Monomial& a, const Monomial& b) {
    require_same_nvars(a, b);
    if (a.degree() != b.degree()) return BorelRel::Incomparable;
    // Suffix sums: b >=_B a iff every suffix sum of b dominates that of a.
    bool b_ge_a = true, a_ge_b = true;
    std::int64_t sa = 0, sb = 0;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        sa += a[i];
        sb += b[i];
        if (sb < sa) b_ge_a = false;
        if (sa < sb) a_ge_b = false;
    }
    if (b_ge_a) return BorelRel::GreaterEqual;
    if (a_ge_b) return BorelRel::Less;
    return BorelRel::Incomparable;
}

Monomial elementary_move_up(const Monomial& m, std::size_t i, std::size_t j) {
    if (i >= j || j >= m.nvars())
        throw std::invalid_argument("elementary move needs i < j within the variable range");
    if (m[i] <= 0)
        throw std::invalid_argument("elementary move needs a positive exponent at x" +
                                    std::to_string(i));
    return m.times_variable(i, -1).times_variable(j, +1);
}

Monomial dehomogenize(const Monomial& m) {
    std::vector<std::int32_t> e(m.exponents());
    if (!e.empty()) e[0] = 0;
    return Monomial(std::move(e));
}

std::size_t min_var(const Monomial& m) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] > 0) return i;
    throw std::invalid_argument("min_var is undefined for the constant monomial");
}

std::size_t max_var(const Monomial& m) {
    for (std::size_t i = m.nvars(); i-- > 0;)
        if (m[i] > 0) return i;
    throw std::invalid_argument("max_var is undefined for the constant monomial");
}

namespace {

void enumerate_rec(std::size_t var, std::int64_t remaining, std::vector<std::int32_t>& cur,
                   std::vector<Monomial>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = static_cast<std::int32_t>(remaining);
        out.emplace_back(cur);
        cur[var] = 0;
        return;
    }
    for (std::int64_t e = 0; e <= remaining; ++e) {
        cur[var] = static_cast<std::int32_t>(e);
        enumerate_rec(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t degree) {
    if (degree < 0) return {};
    if (nvars == 0) return degree == 0 ? std::vector<Monomial>{Monomial(0)} : std::vector<Monomial>{};
    std::vector<Monomial> out;
    std::vector<std::int32_t> cur(nvars, 0);
    enumerate_rec(0, degree, cur, out);
    std::sort(out.begin(), out.end(), LexGreater{});
    return out;
}

std::int64_t count_monomials_of_degree(std::size_t nvars, std::int64_t degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    if (degree < 0) return 0;
    // binom(nvars - 1 + degree, nvars - 1)
    std::int64_t n = static_cast<std::int64_t>(nvars) - 1 + degree;
    std::int64_t k = static_cast<std::int64_t>(nvars) - 1;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = m.nvars(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i);
        if (m[i] > 1) {
            s += '^';
            s += std::to_string(m[i]);
        }
    }
    return s.empty() ? "1" : s;
}

}  // namespace marked
