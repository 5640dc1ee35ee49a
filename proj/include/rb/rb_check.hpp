#pragma once

#include <optional>
#include <vector>

#include "rb/linear_operator.hpp"

namespace rb {

/// Failure certificate: the first basis pair (row-major: i outer, j inner)
/// where the two sides of the Rota-Baxter identity
///     P(x)P(y) = P(x P(y) + P(x) y + weight * x y)
/// disagree, together with both evaluated sides.
template <typename Scalar>
struct RBWitness {
    Eigen::Index i;
    Eigen::Index j;
    TruncElement<Scalar> lhs;
    TruncElement<Scalar> rhs;
};

template <typename Scalar>
struct RBCheckResult {
    std::optional<RBWitness<Scalar>> witness;

    bool holds() const { return !witness.has_value(); }
};

/// Evaluates the Rota-Baxter identity at a single pair (x, y).
template <typename Field>
bool rb_identity_at(const LinearOperator<Field>& P,
                    const TruncElement<typename Field::Scalar>& x,
                    const TruncElement<typename Field::Scalar>& y,
                    const typename Field::Scalar& weight) {
    const auto px = apply(P, x);
    const auto py = apply(P, y);
    const auto lhs = px * py;
    const auto rhs = apply(P, x * py + px * y + weight * (x * y));
    return lhs == rhs;
}

/// Checks the Rota-Baxter identity of the given weight on all (n+1)^2
/// ordered basis pairs. Both sides are bilinear in (x, y), so a pass here
/// is a pass on all of R x R. Deterministic: the witness is always the
/// first failing pair in row-major order.
template <typename Field>
RBCheckResult<typename Field::Scalar> rb_check(const LinearOperator<Field>& P,
                                               const typename Field::Scalar& weight) {
    using Scalar = typename Field::Scalar;
    const Scalar w = P.spec.field.canon(weight);

    const auto es = basis(P.spec);
    std::vector<TruncElement<Scalar>> images;
    images.reserve(es.size());
    for (const auto& e : es)
        images.push_back(apply(P, e));

    for (Eigen::Index i = 0; i <= P.spec.n; ++i) {
        for (Eigen::Index j = 0; j <= P.spec.n; ++j) {
            const auto lhs = images[i] * images[j];
            const auto rhs = apply(P, es[i] * images[j] + images[i] * es[j] + w * (es[i] * es[j]));
            if (lhs != rhs)
                return {RBWitness<Scalar>{i, j, lhs, rhs}};
        }
    }
    return {};
}

} // namespace rb
