#include "findet/linalg.hpp"

namespace findet {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(std::vector<std::vector<Scalar>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Scalar inv = m[row][col].inverse();
        for (std::size_t c = col; c < ncols; ++c)
            m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t ScalarMatrix::rank() const {
    std::vector<std::vector<Scalar>> m(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        m[r].assign(data_.begin() + static_cast<long>(r * cols_),
                    data_.begin() + static_cast<long>((r + 1) * cols_));
    return echelon(m).size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::left_kernel() const {
    // v*M = 0  <=>  M^T v^T = 0: compute the null space of the transpose.
    const std::uint32_t prime = data_.empty() ? 0 : data_[0].prime();
    std::vector<std::vector<Scalar>> t(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        t[c].reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) t[c].push_back(at(r, c));
    }
    std::vector<std::size_t> pivots = echelon(t);
    std::vector<bool> is_pivot(rows_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < rows_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(rows_, Scalar::zero(prime));
        v[free] = Scalar::one(prime);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -t[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace findet
