#include "marked/detail/linalg.hpp"

#include <algorithm>

namespace marked::detail {

std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    Integer prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // pivot: smallest nonzero entry in this column keeps growth down
        std::size_t pivot_row = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            if (pivot_row == rows ||
                mpz_cmpabs(m[r][col].get_mpz_t(), m[pivot_row][col].get_mpz_t()) < 0)
                pivot_row = r;
        }
        if (pivot_row == rows) continue;
        std::swap(m[rank], m[pivot_row]);
        const Integer pivot = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
            m[r][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<Integer>> scaled;
    scaled.reserve(m.size());
    for (const auto& row : m) {
        Integer den = 1;
        for (const auto& q : row) den = lcm(den, Integer(q.get_den()));
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& q : row) r.push_back(Integer(q.get_num()) * (den / Integer(q.get_den())));
        scaled.push_back(std::move(r));
    }
    return integer_matrix_rank(std::move(scaled));
}

}  // namespace marked::detail
