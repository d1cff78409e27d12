#pragma once

#include "martex/rational.hpp"

#include <optional>
#include <vector>

namespace martex {

/// Dense matrix over exact rationals. Sized for desk-scale instances; all
/// eliminations are plain fraction Gauss-Jordan with first-nonzero pivoting,
/// which keeps results canonical and reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return a_[r][c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r][c]; }

    Matrix transposed() const;

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in order.
    std::vector<size_t> rref();

    size_t rank() const;

    /// Basis of the right null space {v : Av = 0}, one vector per free
    /// column, in column order. Each basis vector has a 1 in its free slot.
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// Basis of the left null space {z : zA = 0}.
    std::vector<std::vector<Rational>> left_kernel_basis() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> a_;
};

/// Outcome of solving Ax = b exactly. Exactly one of `solution` and
/// `infeasibility` is set. The infeasibility certificate is a row vector z
/// with zA = 0 and z.b != 0, reconstructed from the elimination trace, so a
/// verifier can replay it without redoing the elimination.
struct LinearSolveResult {
    std::optional<std::vector<Rational>> solution;
    std::optional<std::vector<Rational>> infeasibility;
};

LinearSolveResult solve_exact(const Matrix& a, const std::vector<Rational>& b);

} // namespace martex
