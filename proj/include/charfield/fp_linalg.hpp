#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace charfield::linalg {

// Gaussian elimination over an exact field scalar (anything with + - * / and ==).

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Reduces m to reduced row echelon form in place and returns the pivot columns.
template <class Scalar>
std::vector<int> rref_in_place(DenseMatrix<Scalar>& m) {
    const Scalar zero(0), one(1);
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!(m(r, col) == zero)) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        const Scalar inv = one / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == zero) continue;
            const Scalar f = m(r, col);
            m.row(r) -= f * m.row(row);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

template <class Derived>
int rank(const Eigen::MatrixBase<Derived>& a) {
    DenseMatrix<typename Derived::Scalar> m = a;
    return static_cast<int>(rref_in_place(m).size());
}

// Columns form a basis of {x : a x = 0}, ordered by free variable.
template <class Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> m = a;
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Constant(m.cols(), static_cast<Eigen::Index>(free_cols.size()), Scalar(0));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        basis(free_cols[j], j) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], j) = -m(r, free_cols[j]);
    }
    return basis;
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    DenseMatrix<Scalar> m = a;
    const Scalar zero(0);
    Scalar det(1);
    const Eigen::Index n = m.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!(m(r, col) == zero)) {
                sel = r;
                break;
            }
        if (sel < 0) return zero;
        if (sel != col) {
            m.row(sel).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = Scalar(1) / m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col) == zero) continue;
            const Scalar f = m(r, col) * inv;
            m.row(r) -= f * m.row(col);
        }
    }
    return det;
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    DenseMatrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
    const auto pivots = rref_in_place(aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("matrix is singular");
    return aug.rightCols(n);
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& a, long long e) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> base = a;
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Identity(a.rows(), a.cols());
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

}  // namespace charfield::linalg
