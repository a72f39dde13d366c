#ifndef CURVEDIFF_LINSOLVE_HPP
#define CURVEDIFF_LINSOLVE_HPP

#include <cstddef>
#include <vector>

#include "curvediff/rational.hpp"

namespace curvediff {

template <class F>
struct LinearSolution {
    bool solvable = false;
    std::vector<F> x;     // one solution when solvable
    int rank = 0;
    int kernel_dim = 0;   // 0 means the solution is unique
};

// Exact Gauss-Jordan elimination for A x = b over a field.
template <class F>
LinearSolution<F> solve_linear_system(std::vector<std::vector<F>> a, std::vector<F> b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        F inv = F(F(1) / a[row][col]);
        for (size_t j = col; j < cols; ++j) a[row][j] = F(a[row][j] * inv);
        b[row] = F(b[row] * inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || is_zero(a[r][col])) continue;
            F factor = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] = F(a[r][j] - factor * a[row][j]);
            b[r] = F(b[r] - factor * b[row]);
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    LinearSolution<F> out;
    out.rank = static_cast<int>(row);
    out.kernel_dim = static_cast<int>(cols) - out.rank;
    for (size_t r = row; r < rows; ++r) {
        if (!is_zero(b[r])) return out; // inconsistent
    }
    out.solvable = true;
    out.x.assign(cols, F(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) out.x[pivot_col_of_row[r]] = b[r];
    return out;
}

} // namespace curvediff

#endif
