#pragma once

// Dense linear algebra over F_p. Matrices are row-major vectors of rows;
// vectors act on the left (row vector times matrix).

#include <cstdint>
#include <vector>

#include "integer.hpp"

namespace ramify::fp {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = invmod(m[r][c], p);
        for (auto& x : m[r]) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = submod(m[i][j], mulmod(f, m[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

inline std::size_t rank(Matrix m, std::uint64_t p) { return rref(m, p).size(); }

// Basis of {x : x * m = 0} (left kernel), m of size rows x cols.
inline Matrix left_kernel(const Matrix& m, std::uint64_t p) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    // Row-reduce the transpose: solutions of m^T x^T = 0.
    Matrix t(cols, Row(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    auto pivots = rref(t, p);
    std::vector<bool> is_pivot(rows, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix kernel;
    for (std::size_t free = 0; free < rows; ++free) {
        if (is_pivot[free]) continue;
        Row v(rows, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = submod(0, t[k][free], p);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

inline Row mul(const Row& v, const Matrix& m, std::uint64_t p) {
    Row out(m.empty() ? 0 : m[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = addmod(out[j], mulmod(v[i], m[i][j], p), p);
    }
    return out;
}

}  // namespace ramify::fp
