#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qtorsion {

/// Dense row-major matrix over an exact field.
template <class T>
struct ExactMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    ExactMatrix() = default;
    ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves A x = b by Gauss-Jordan elimination. Returns nullopt when the
/// system is inconsistent; free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve_exact(ExactMatrix<T> a, std::vector<T> b) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a(piv, col) == T(0)) ++piv;
        if (piv == m) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
            std::swap(b[piv], b[row]);
        }
        const T inv = T(1) / a(row, col);
        for (std::size_t j = col; j < n; ++j) a(row, j) *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col) == T(0)) continue;
            const T f = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(row, j);
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != T(0)) return std::nullopt;
    std::vector<T> x(n, T(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace qtorsion
