#include "martex/matrix.hpp"

#include "martex/error.hpp"

#include <algorithm>

namespace martex {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.a_[c][r] = a_[r][c];
    return t;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pivot = rows_;
        for (size_t r = row; r < rows_; ++r) {
            if (!a_[r][col].is_zero()) { pivot = r; break; }
        }
        if (pivot == rows_) continue;
        std::swap(a_[row], a_[pivot]);
        Rational inv = Rational(1) / a_[row][col];
        for (size_t c = col; c < cols_; ++c) a_[row][c] *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row || a_[r][col].is_zero()) continue;
            Rational f = a_[r][col];
            for (size_t c = col; c < cols_; ++c) a_[r][c] -= f * a_[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rational>> Matrix::kernel_basis() const {
    Matrix red = *this;
    std::vector<size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red.a_[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> Matrix::left_kernel_basis() const {
    return transposed().kernel_basis();
}

LinearSolveResult solve_exact(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw Error("linalg", "rhs size mismatch");
    const size_t m = a.rows(), n = a.cols();

    // eliminate on [A | b | I]; the I block tracks the row operations so an
    // inconsistent row hands us its certificate directly
    Matrix t(m, n + 1 + m);
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) t.at(r, c) = a.at(r, c);
        t.at(r, n) = b[r];
        t.at(r, n + 1 + r) = Rational(1);
    }

    // manual elimination restricted to the first n+1 columns as pivot range
    size_t row = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pivot = m;
        for (size_t r = row; r < m; ++r)
            if (!t.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot == m) continue;
        if (pivot != row)
            for (size_t c = 0; c < n + 1 + m; ++c) std::swap(t.at(row, c), t.at(pivot, c));
        Rational inv = Rational(1) / t.at(row, col);
        for (size_t c = 0; c < n + 1 + m; ++c) t.at(row, c) *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || t.at(r, col).is_zero()) continue;
            Rational f = t.at(r, col);
            for (size_t c = 0; c < n + 1 + m; ++c) t.at(r, c) -= f * t.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }

    // any row that is zero on A but nonzero on b is an inconsistency; its
    // I-block row z satisfies zA = 0, z.b != 0
    for (size_t r = row; r < m; ++r) {
        if (t.at(r, n).is_zero()) continue;
        std::vector<Rational> z(m);
        for (size_t c = 0; c < m; ++c) z[c] = t.at(r, n + 1 + c);
        LinearSolveResult res;
        res.infeasibility = std::move(z);
        return res;
    }

    std::vector<Rational> x(n);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = t.at(i, n);
    LinearSolveResult res;
    res.solution = std::move(x);
    return res;
}

} // namespace martex
