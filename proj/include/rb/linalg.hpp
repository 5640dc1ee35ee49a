#pragma once

#include <vector>

#include "rb/matrix.hpp"
#include "rb/errors.hpp"

namespace rb {

// Exact Gauss-Jordan elimination over a field scalar. Any nonzero entry can
// pivot; there is no magnitude pivoting and no rank tolerance.

template <typename Scalar>
struct Rref {
    Matrix<Scalar> mat;
    std::vector<Eigen::Index> pivot_cols;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <typename Scalar>
Rref<Scalar> reduced_row_echelon(Matrix<Scalar> m) {
    Rref<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != Scalar(0)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            m.row(pivot).swap(m.row(row));
        const Scalar scale = inv(m(row, col));
        for (Eigen::Index c = col; c < m.cols(); ++c)
            m(row, c) = scale * m(row, c);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == Scalar(0))
                continue;
            const Scalar factor = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.mat = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
    return reduced_row_echelon(m).rank();
}

template <typename Scalar>
bool is_invertible(const Matrix<Scalar>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Columns form a basis of the kernel (numStates = cols - rank of them);
/// returns a cols x 0 matrix for injective maps. Basis vectors are indexed
/// by the free columns in ascending order.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& m) {
    const Rref<Scalar> r = reduced_row_echelon(m);
    std::vector<Eigen::Index> free_cols;
    {
        std::size_t next_pivot = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (next_pivot < r.pivot_cols.size() && r.pivot_cols[next_pivot] == c)
                ++next_pivot;
            else
                free_cols.push_back(c);
        }
    }
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], static_cast<Eigen::Index>(k)) = Scalar(1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            basis(r.pivot_cols[pr], static_cast<Eigen::Index>(k)) =
                -r.mat(static_cast<Eigen::Index>(pr), free_cols[k]);
    }
    return basis;
}

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols())
        throw InvalidDataError("only square matrices can be inverted");
    const Eigen::Index n = m.rows();
    if (n == 0)
        return m;
    Matrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
    const Rref<Scalar> r = reduced_row_echelon(std::move(aug));
    // [M | I] always has full row rank; M is invertible exactly when no
    // pivot spills into the identity half.
    if (r.pivot_cols.back() >= n)
        throw InvalidDataError("matrix is singular");
    return r.mat.rightCols(n);
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols())
        throw InvalidDataError("determinant of a non-square matrix");
    bool negate = false;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < m.rows(); ++r) {
            if (m(r, col) != Scalar(0)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return Scalar(0);
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            negate = !negate;
        }
        const Scalar scale = inv(m(col, col));
        for (Eigen::Index r = col + 1; r < m.rows(); ++r) {
            if (m(r, col) == Scalar(0))
                continue;
            const Scalar factor = scale * m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) = m(r, c) - factor * m(col, c);
        }
    }
    Scalar det = negate ? Scalar(-1) : Scalar(1);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        det = det * m(i, i);
    return det;
}

} // namespace rb
