#pragma once

#include <utility>

#include "rb/trunc_algebra.hpp"

namespace rb {

/// A K-linear map R -> R as an (n+1)x(n+1) matrix in the basis
/// (1, xbar_1, ..., xbar_n); column j holds the coordinates of the image of
/// basis element j.
template <typename Field>
struct LinearOperator {
    using Scalar = typename Field::Scalar;

    AlgebraSpec<Field> spec;
    Matrix<Scalar> matrix;

    LinearOperator(AlgebraSpec<Field> s, Matrix<Scalar> m) : spec(std::move(s)), matrix(std::move(m)) {
        if (matrix.rows() != spec.dim() || matrix.cols() != spec.dim())
            throw SpecMismatchError("operator matrix is " + std::to_string(matrix.rows()) + "x" +
                                    std::to_string(matrix.cols()) + ", expected " +
                                    std::to_string(spec.dim()) + "x" + std::to_string(spec.dim()));
        matrix = canon_matrix(spec.field, matrix);
    }
};

namespace detail {

template <typename Field>
void require_same_spec(const LinearOperator<Field>& a, const LinearOperator<Field>& b) {
    if (a.spec != b.spec)
        throw SpecMismatchError("operators live over different algebras");
}

} // namespace detail

template <typename Field>
bool operator==(const LinearOperator<Field>& a, const LinearOperator<Field>& b) {
    return a.spec == b.spec && a.matrix == b.matrix;
}

template <typename Field>
bool operator!=(const LinearOperator<Field>& a, const LinearOperator<Field>& b) {
    return !(a == b);
}

template <typename Field>
LinearOperator<Field> zero_operator(const AlgebraSpec<Field>& spec) {
    using Scalar = typename Field::Scalar;
    return {spec, Matrix<Scalar>::Zero(spec.dim(), spec.dim())};
}

template <typename Field>
LinearOperator<Field> identity_operator(const AlgebraSpec<Field>& spec) {
    using Scalar = typename Field::Scalar;
    return {spec, Matrix<Scalar>::Identity(spec.dim(), spec.dim())};
}

template <typename Field>
TruncElement<typename Field::Scalar> apply(const LinearOperator<Field>& P,
                                           const TruncElement<typename Field::Scalar>& x) {
    if (x.n() != P.spec.n)
        throw SpecMismatchError("element has " + std::to_string(x.n()) + " variables, operator expects " +
                                std::to_string(P.spec.n));
    return from_coords(P.spec, (P.matrix * to_coords(x)).eval());
}

/// compose(P, Q) = P after Q.
template <typename Field>
LinearOperator<Field> compose(const LinearOperator<Field>& P, const LinearOperator<Field>& Q) {
    detail::require_same_spec(P, Q);
    return {P.spec, (P.matrix * Q.matrix).eval()};
}

template <typename Field>
LinearOperator<Field> operator+(const LinearOperator<Field>& P, const LinearOperator<Field>& Q) {
    detail::require_same_spec(P, Q);
    return {P.spec, (P.matrix + Q.matrix).eval()};
}

template <typename Field>
LinearOperator<Field> operator-(const LinearOperator<Field>& P, const LinearOperator<Field>& Q) {
    detail::require_same_spec(P, Q);
    return {P.spec, (P.matrix - Q.matrix).eval()};
}

template <typename Field>
LinearOperator<Field> operator-(const LinearOperator<Field>& P) {
    return {P.spec, (-P.matrix).eval()};
}

template <typename Field>
LinearOperator<Field> operator*(const typename Field::Scalar& c, const LinearOperator<Field>& P) {
    return {P.spec, (c * P.matrix).eval()};
}

} // namespace rb
