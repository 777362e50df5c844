#include "marked/oracle.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "marked/detail/linalg.hpp"
#include "marked/errors.hpp"

namespace marked {

bool borel_bfs_leq(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial variable counts differ");
    if (a.degree() != b.degree()) return false;
    std::set<Monomial, LexLess> seen{a};
    std::deque<Monomial> queue{a};
    while (!queue.empty()) {
        Monomial cur = queue.front();
        queue.pop_front();
        if (cur == b) return true;
        for (std::size_t i = 0; i < cur.nvars(); ++i) {
            if (cur[i] <= 0) continue;
            for (std::size_t j = i + 1; j < cur.nvars(); ++j) {
                Monomial next = elementary_move_up(cur, i, j);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

bool star_uniqueness_scan(const StronglyStableIdeal& j, std::int64_t d_max) {
    for (std::int64_t d = j.initial_degree(); d <= d_max; ++d) {
        for (const auto& g : monomials_of_degree(j.nvars(), d)) {
            if (!j.contains(g)) continue;
            int matches = 0;
            for (const auto& a : j.basis()) {
                if (!a.divides(g)) continue;
                Monomial eta = g / a;
                if (eta.is_one() || min_var(a) >= max_var(eta)) ++matches;
            }
            if (matches != 1) return false;
        }
    }
    return true;
}

int default_rank_window(const StronglyStableIdeal& j) {
    return j.regularity() + static_cast<int>(j.nvars());
}

RankProblem build_rank_problem(const MarkedSet& g, std::int64_t degree) {
    RankProblem problem;
    problem.degree = degree;
    problem.columns = monomials_of_degree(g.ideal().nvars(), degree);
    for (const auto& f : g.polys()) {
        const std::int64_t dd = degree - f.head.degree();
        if (dd < 0) continue;
        for (const auto& delta : monomials_of_degree(g.ideal().nvars(), dd))
            problem.rows.push_back(f.poly().mono_mul(delta));
    }
    return problem;
}

bool hilbert_rank_check(const MarkedSet& g, int l_max) {
    if (g.superminimal())
        throw std::invalid_argument("hilbert_rank_check needs a full marked set");
    const StronglyStableIdeal& j = g.ideal();
    if (l_max < j.regularity() + 1)
        throw std::invalid_argument("rank window must reach regularity + 1");

    for (int l = j.initial_degree(); l <= l_max; ++l) {
        const RankProblem problem = build_rank_problem(g, l);
        std::map<Monomial, std::size_t, LexGreater> col_of;
        std::int64_t dim_j = 0;
        for (const auto& m : problem.columns) {
            col_of.emplace(m, col_of.size());
            if (j.contains(m)) ++dim_j;
        }

        std::vector<std::vector<Rational>> rows;
        rows.reserve(problem.rows.size());
        for (const auto& p : problem.rows) {
            std::vector<Rational> row(problem.columns.size(), Rational(0));
            for (const auto& [m, c] : p.terms()) {
                if (!c.is_constant())
                    throw std::invalid_argument("rank oracle needs rational coefficients");
                row[col_of.at(m)] = c.terms().empty() ? Rational(0) : c.terms().front().second;
            }
            rows.push_back(std::move(row));
        }
        const std::size_t rank = detail::rational_matrix_rank(rows);
        if (static_cast<std::int64_t>(rank) != dim_j) return false;
    }
    return true;
}

}  // namespace marked
