#pragma once

#include <optional>
#include <string>

#include "rb/linear_operator.hpp"

namespace rb {

/// Reason codes for rejecting an operator, in decision priority order.
/// The first three apply to weight 0, the last three to weight 1.
enum class NotRbReason {
    NonzeroFirstRow,
    LSquaredNonzero,
    Lv0Nonzero,
    AlphaNotZeroOrMinusOne,
    OffDiagonalBlockNonzero,
    QNotIdempotent,
};

inline const char* reason_code(NotRbReason r) {
    switch (r) {
        case NotRbReason::NonzeroFirstRow: return "nonzero-first-row";
        case NotRbReason::LSquaredNonzero: return "L-squared-nonzero";
        case NotRbReason::Lv0Nonzero: return "Lv0-nonzero";
        case NotRbReason::AlphaNotZeroOrMinusOne: return "alpha-not-in-{0,-1}";
        case NotRbReason::OffDiagonalBlockNonzero: return "off-diagonal-block-nonzero";
        case NotRbReason::QNotIdempotent: return "Q-not-idempotent";
    }
    return "unknown";
}

/// Parameters of a weight-0 Rota-Baxter operator: matrix block form
/// [[0, 0], [v0, L]] with L^2 = 0 and L v0 = 0.
template <typename Scalar>
struct Weight0Data {
    Vector<Scalar> v0;
    Matrix<Scalar> L;

    friend bool operator==(const Weight0Data& a, const Weight0Data& b) {
        return a.v0.size() == b.v0.size() && a.L.rows() == b.L.rows() && a.v0 == b.v0 && a.L == b.L;
    }
    friend bool operator!=(const Weight0Data& a, const Weight0Data& b) { return !(a == b); }
};

/// Parameters of a weight-1 Rota-Baxter operator: P(a + u) = alpha*a - Q(u)
/// with alpha in {0, -1} and Q idempotent.
template <typename Scalar>
struct Weight1Data {
    Scalar alpha;
    Matrix<Scalar> Q;

    friend bool operator==(const Weight1Data& a, const Weight1Data& b) {
        return a.Q.rows() == b.Q.rows() && a.alpha == b.alpha && a.Q == b.Q;
    }
    friend bool operator!=(const Weight1Data& a, const Weight1Data& b) { return !(a == b); }
};

/// Decider verdict: either the extracted parameters or the first violated
/// shape condition in priority order.
template <typename Data>
struct ClassifyResult {
    std::optional<Data> data;
    std::optional<NotRbReason> reason;

    bool is_rb() const { return data.has_value(); }

    static ClassifyResult rb(Data d) { return {std::move(d), std::nullopt}; }
    static ClassifyResult not_rb(NotRbReason r) { return {std::nullopt, r}; }
};

namespace detail {

template <typename Derived>
bool block_is_zero(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Scalar(0))
                return false;
    return true;
}

} // namespace detail

// ---- weight 0 ----------------------------------------------------------

/// Builds the operator [[0, 0], [v0, L]]. The data is validated: L^2 = 0 and
/// L v0 = 0 are exactly the conditions making the result Rota-Baxter of
/// weight 0, so a violation is an error rather than a silent bad operator.
template <typename Field>
LinearOperator<Field> make_weight0_operator(const Weight0Data<typename Field::Scalar>& d,
                                            const AlgebraSpec<Field>& spec) {
    using Scalar = typename Field::Scalar;
    if (d.v0.size() != spec.n || d.L.rows() != spec.n || d.L.cols() != spec.n)
        throw SpecMismatchError("weight-0 data does not match algebra with n = " + std::to_string(spec.n));
    const Matrix<Scalar> L = canon_matrix(spec.field, d.L);
    const Vector<Scalar> v0 = canon_vector(spec.field, d.v0);
    if (!detail::block_is_zero((L * L).eval()))
        throw InvalidDataError("invalid weight-0 data: L squared is nonzero");
    if (!detail::block_is_zero((L * v0).eval()))
        throw InvalidDataError("invalid weight-0 data: L * v0 is nonzero");

    Matrix<Scalar> m = Matrix<Scalar>::Zero(spec.dim(), spec.dim());
    m.col(0).tail(spec.n) = v0;
    m.block(1, 1, spec.n, spec.n) = L;
    return {spec, std::move(m)};
}

/// Reads off (v0, L) when the matrix has the weight-0 shape: zero first row
/// (image inside V), L^2 = 0 and L v0 = 0 (the operator squares to zero).
template <typename Field>
ClassifyResult<Weight0Data<typename Field::Scalar>> classify_weight0(const LinearOperator<Field>& P) {
    using Scalar = typename Field::Scalar;
    using Result = ClassifyResult<Weight0Data<Scalar>>;
    const Eigen::Index n = P.spec.n;

    if (!detail::block_is_zero(P.matrix.row(0)))
        return Result::not_rb(NotRbReason::NonzeroFirstRow);
    Weight0Data<Scalar> d{P.matrix.col(0).tail(n), P.matrix.block(1, 1, n, n)};
    if (!detail::block_is_zero((d.L * d.L).eval()))
        return Result::not_rb(NotRbReason::LSquaredNonzero);
    if (!detail::block_is_zero((d.L * d.v0).eval()))
        return Result::not_rb(NotRbReason::Lv0Nonzero);
    return Result::rb(std::move(d));
}

// ---- weight 1 ----------------------------------------------------------

/// Builds the block-diagonal operator diag(alpha, -Q) realizing
/// P(a + u) = alpha*a - Q(u). Validates alpha in {0, -1} and Q^2 = Q.
template <typename Field>
LinearOperator<Field> make_weight1_operator(const Weight1Data<typename Field::Scalar>& d,
                                            const AlgebraSpec<Field>& spec) {
    using Scalar = typename Field::Scalar;
    if (d.Q.rows() != spec.n || d.Q.cols() != spec.n)
        throw SpecMismatchError("weight-1 data does not match algebra with n = " + std::to_string(spec.n));
    const Scalar alpha = spec.field.canon(d.alpha);
    if (alpha != Scalar(0) && alpha != Scalar(-1))
        throw InvalidDataError("invalid weight-1 data: alpha must be 0 or -1");
    const Matrix<Scalar> Q = canon_matrix(spec.field, d.Q);
    if ((Q * Q).eval() != Q)
        throw InvalidDataError("invalid weight-1 data: Q is not idempotent");

    Matrix<Scalar> m = Matrix<Scalar>::Zero(spec.dim(), spec.dim());
    m(0, 0) = alpha;
    m.block(1, 1, spec.n, spec.n) = -Q;
    return {spec, std::move(m)};
}

/// Accepts exactly the matrices of shape diag(alpha, -Q) with alpha in
/// {0, -1} and Q idempotent, and extracts (alpha, Q).
template <typename Field>
ClassifyResult<Weight1Data<typename Field::Scalar>> classify_weight1(const LinearOperator<Field>& P) {
    using Scalar = typename Field::Scalar;
    using Result = ClassifyResult<Weight1Data<Scalar>>;
    const Eigen::Index n = P.spec.n;

    const Scalar alpha = P.matrix(0, 0);
    if (alpha != Scalar(0) && alpha != Scalar(-1))
        return Result::not_rb(NotRbReason::AlphaNotZeroOrMinusOne);
    if (!detail::block_is_zero(P.matrix.row(0).tail(n)) ||
        !detail::block_is_zero(P.matrix.col(0).tail(n)))
        return Result::not_rb(NotRbReason::OffDiagonalBlockNonzero);
    Weight1Data<Scalar> d{alpha, (-P.matrix.block(1, 1, n, n)).eval()};
    if ((d.Q * d.Q).eval() != d.Q)
        return Result::not_rb(NotRbReason::QNotIdempotent);
    return Result::rb(std::move(d));
}

// ---- nonzero weight ----------------------------------------------------

/// For weight != 0, P satisfies the weight-lambda identity exactly when
/// lambda^-1 P satisfies the weight-1 identity.
template <typename Field>
LinearOperator<Field> rescale_to_weight1(const LinearOperator<Field>& P,
                                         const typename Field::Scalar& weight) {
    using Scalar = typename Field::Scalar;
    const Scalar w = P.spec.field.canon(weight);
    if (w == Scalar(0))
        throw InvalidDataError("weight must be nonzero to rescale to weight 1");
    return inv(w) * P;
}

template <typename Field>
ClassifyResult<Weight1Data<typename Field::Scalar>> classify_weight_lambda(
    const LinearOperator<Field>& P, const typename Field::Scalar& weight) {
    return classify_weight1(rescale_to_weight1(P, weight));
}

} // namespace rb
