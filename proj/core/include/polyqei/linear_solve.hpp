#pragma once

#include "polyqei/rational.hpp"

#include <stdexcept>
#include <vector>

namespace polyqei {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Dense Gaussian elimination over the rationals with exact pivoting (largest
// absolute pivot, a deterministic tie-break by row order). Matrices here are
// small (order ~ n+1 for n <= ~50), so fraction growth is acceptable and the
// residual of the returned solution is identically zero.
//
// Multi-RHS form: solves M X = R column-by-column in one elimination pass.
inline std::vector<RationalVector> solve_linear_exact_multi(RationalMatrix m,
                                                            std::vector<RationalVector> rhs_cols) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("solve_linear_exact: matrix not square");
    for (const auto& col : rhs_cols)
        if (col.size() != n) throw std::invalid_argument("solve_linear_exact: rhs size mismatch");

    const std::size_t ncols = rhs_cols.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0) throw std::runtime_error("solve_linear_exact: singular system");
        if (piv != c) {
            std::swap(m[piv], m[c]);
            for (auto& col : rhs_cols) std::swap(col[piv], col[c]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            for (std::size_t j = 0; j < ncols; ++j) rhs_cols[j][r] -= f * rhs_cols[j][c];
        }
    }
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < n; ++i) rhs_cols[j][i] /= m[i][i];
    return rhs_cols;
}

inline RationalVector solve_linear_exact(const RationalMatrix& m, const RationalVector& rhs) {
    return solve_linear_exact_multi(m, {rhs})[0];
}

}  // namespace polyqei
