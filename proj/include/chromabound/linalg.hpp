#pragma once

// Small dense exact linear algebra: fraction-free rank over the integers and
// reduced row echelon form over the rationals.

#include <cstddef>
#include <utility>
#include <vector>

#include "chromabound/exactmath.hpp"

namespace chromabound::linalg {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

/// Rank of an integer matrix by Bareiss elimination; every division is exact.
inline std::size_t rank_fraction_free(IntMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev_pivot;
            a[r][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

/// In-place reduced row echelon form; zero rows are dropped.
/// Returns the pivot column of each remaining row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

}  // namespace chromabound::linalg
