#ifndef CTEL_LINALG_HPP
#define CTEL_LINALG_HPP

#include <optional>
#include <vector>

namespace ctel {

// Dense exact Gaussian elimination over a field type F (KElem, XRat, or Rat
// wrapped in KElem with nvars 0). F needs +,-,*,inv(),is_zero(),==.

template <class F>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> A, std::vector<F> b,
                                           const F& zero) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && A[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        F inv = A[row][col].inv();
        for (size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
        b[row] = b[row] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || A[r][col].is_zero()) continue;
            F f = A[r][col];
            for (size_t j = col; j < n; ++j) A[r][j] = A[r][j] - f * A[row][j];
            b[r] = b[r] - f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<F> x(n, zero);
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

template <class F>
int rank_of(std::vector<std::vector<F>> A) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && A[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        F inv = A[row][col].inv();
        for (size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
        for (size_t r = row + 1; r < m; ++r) {
            if (A[r][col].is_zero()) continue;
            F f = A[r][col];
            for (size_t j = col; j < n; ++j) A[r][j] = A[r][j] - f * A[row][j];
        }
        ++row;
    }
    return (int)row;
}

} // namespace ctel

#endif
