#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace marked {

/// Monomial in n+1 variables x0 < x1 < ... < xn, stored as a dense
/// exponent vector indexed by variable. The constant monomial 1 is the
/// all-zero vector. Value type, immutable in spirit: every operation
/// returns a fresh monomial.
class Monomial {
public:
    /// The constant monomial 1 in `nvars` variables.
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    Monomial(std::initializer_list<std::int32_t> exps) : exp_(exps) {}
    explicit Monomial(std::vector<std::int32_t> exps) : exp_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return exp_.size(); }
    std::int32_t operator[](std::size_t i) const { return exp_[i]; }
    const std::vector<std::int32_t>& exponents() const { return exp_; }

    /// Total degree, recomputed from the exponents.
    std::int64_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // *this | o

    Monomial times_variable(std::size_t i, std::int32_t k = 1) const;

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

private:
    std::vector<std::int32_t> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Lexicographic order with x0 < x1 < ... < xn: a > b iff the last
/// (highest-index) non-zero entry of a - b is positive. Total order on
/// monomials of any degree. Throws std::invalid_argument on mismatched
/// variable counts.
std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b);

inline bool lex_less(const Monomial& a, const Monomial& b) {
    return lex_cmp(a, b) == std::strong_ordering::less;
}
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    return lex_cmp(a, b) == std::strong_ordering::greater;
}

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

/// Canonical basis order: degree ascending, Lex descending within a degree.
struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return lex_greater(a, b);
    }
};

/// Result of comparing b against a in the Borel partial order.
enum class BorelRel {
    GreaterEqual,  ///< b >=_B a (b reachable from a by increasing moves)
    Less,          ///< b <_B a strictly
    Incomparable,  ///< same degree but neither direction, or unequal degrees
};

/// Decides b >=_B a by the cumulative-suffix-sum criterion: at equal
/// degree, b >=_B a iff sum_{j>=i} b_j >= sum_{j>=i} a_j for every i.
/// Unequal degrees are Incomparable. Validated against the breadth-first
/// move-chain oracle (see oracle.hpp).
BorelRel borel_compare(const Monomial& a, const Monomial& b);

inline bool borel_leq(const Monomial& a, const Monomial& b) {
    return borel_compare(a, b) == BorelRel::GreaterEqual;
}

/// Increasing elementary move e+_{i,j}: m / x_i * x_j with i < j.
/// Throws std::invalid_argument if i >= j or the exponent of x_i is zero.
Monomial elementary_move_up(const Monomial& m, std::size_t i, std::size_t j);

/// The monomial with x0 set to 1 (exponent of x0 zeroed). Idempotent.
Monomial dehomogenize(const Monomial& m);

/// Smallest / largest variable index with a positive exponent.
/// Undefined for the constant monomial 1; throws std::invalid_argument.
std::size_t min_var(const Monomial& m);
std::size_t max_var(const Monomial& m);

/// All monomials of the given degree in `nvars` variables, Lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t degree);

/// Number of monomials of the given degree in `nvars` variables.
std::int64_t count_monomials_of_degree(std::size_t nvars, std::int64_t degree);

/// Text form "x3^2*x1*x0" (variables in descending index order,
/// caret powers, '*' separators; the constant monomial prints as "1").
/// parse_monomial accepts variables in any order; see io.hpp.
std::string to_string(const Monomial& m);

}  // namespace marked
