#pragma once

#include <utility>
#include <vector>

#include "rb/fields.hpp"

namespace rb {

/// The truncated polynomial algebra R = K (+) V over the given field, where
/// V is the n-dimensional span of xbar_1..xbar_n and V*V = 0. All matrices
/// and coordinates use the fixed basis (1, xbar_1, ..., xbar_n).
template <typename Field>
struct AlgebraSpec {
    Field field;
    Eigen::Index n;

    AlgebraSpec(Field f, Eigen::Index vars) : field(std::move(f)), n(vars) {
        if (n < 1)
            throw InvalidDataError("number of variables must be >= 1, got " + std::to_string(n));
    }

    Eigen::Index dim() const { return n + 1; }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
        return a.field == b.field && a.n == b.n;
    }
    friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) { return !(a == b); }
};

/// Element a + sum_i b_i xbar_i: a scalar part and the vector of V-coordinates.
/// The representation is unique, so equality is componentwise.
template <typename Scalar>
struct TruncElement {
    Scalar scalar;
    Vector<Scalar> vec;

    Eigen::Index n() const { return vec.size(); }
};

namespace detail {

template <typename Scalar>
void require_same_dim(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    if (x.n() != y.n())
        throw SpecMismatchError("elements live in algebras of different dimension (" +
                                std::to_string(x.n()) + " vs " + std::to_string(y.n()) + " variables)");
}

} // namespace detail

template <typename Scalar>
bool operator==(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    return x.n() == y.n() && x.scalar == y.scalar && x.vec == y.vec;
}

template <typename Scalar>
bool operator!=(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    return !(x == y);
}

template <typename Scalar>
TruncElement<Scalar> operator+(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    detail::require_same_dim(x, y);
    return {x.scalar + y.scalar, x.vec + y.vec};
}

template <typename Scalar>
TruncElement<Scalar> operator-(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    detail::require_same_dim(x, y);
    return {x.scalar - y.scalar, x.vec - y.vec};
}

template <typename Scalar>
TruncElement<Scalar> operator-(const TruncElement<Scalar>& x) {
    return {-x.scalar, -x.vec};
}

/// (a + u)(b + v) = ab + av + bu; the uv term vanishes since V*V = 0.
template <typename Scalar>
TruncElement<Scalar> operator*(const TruncElement<Scalar>& x, const TruncElement<Scalar>& y) {
    detail::require_same_dim(x, y);
    return {x.scalar * y.scalar, (x.scalar * y.vec + y.scalar * x.vec).eval()};
}

template <typename Scalar>
TruncElement<Scalar> operator*(const Scalar& c, const TruncElement<Scalar>& x) {
    return {c * x.scalar, (c * x.vec).eval()};
}

template <typename Scalar>
bool is_zero(const TruncElement<Scalar>& x) {
    if (x.scalar != Scalar(0))
        return false;
    for (Eigen::Index i = 0; i < x.n(); ++i)
        if (x.vec(i) != Scalar(0))
            return false;
    return true;
}

template <typename Field>
TruncElement<typename Field::Scalar> zero_element(const AlgebraSpec<Field>& spec) {
    using Scalar = typename Field::Scalar;
    return {spec.field.zero(), Vector<Scalar>::Constant(spec.n, spec.field.zero())};
}

template <typename Field>
TruncElement<typename Field::Scalar> one_element(const AlgebraSpec<Field>& spec) {
    auto x = zero_element(spec);
    x.scalar = spec.field.one();
    return x;
}

/// Basis element k: 1 for k = 0, xbar_k for 1 <= k <= n.
template <typename Field>
TruncElement<typename Field::Scalar> basis_element(const AlgebraSpec<Field>& spec, Eigen::Index k) {
    if (k < 0 || k > spec.n)
        throw InvalidDataError("basis index " + std::to_string(k) + " out of range [0, " +
                               std::to_string(spec.n) + "]");
    auto x = zero_element(spec);
    if (k == 0)
        x.scalar = spec.field.one();
    else
        x.vec(k - 1) = spec.field.one();
    return x;
}

/// The n+1 basis elements (1, xbar_1, ..., xbar_n) in order.
template <typename Field>
std::vector<TruncElement<typename Field::Scalar>> basis(const AlgebraSpec<Field>& spec) {
    std::vector<TruncElement<typename Field::Scalar>> out;
    out.reserve(static_cast<std::size_t>(spec.dim()));
    for (Eigen::Index k = 0; k <= spec.n; ++k)
        out.push_back(basis_element(spec, k));
    return out;
}

/// Coordinates (a, b_1, ..., b_n) of x in the fixed basis.
template <typename Scalar>
Vector<Scalar> to_coords(const TruncElement<Scalar>& x) {
    Vector<Scalar> c(x.n() + 1);
    c(0) = x.scalar;
    c.tail(x.n()) = x.vec;
    return c;
}

template <typename Field>
TruncElement<typename Field::Scalar> from_coords(const AlgebraSpec<Field>& spec,
                                                 const Vector<typename Field::Scalar>& coords) {
    if (coords.size() != spec.dim())
        throw SpecMismatchError("coordinate vector has length " + std::to_string(coords.size()) +
                                ", expected " + std::to_string(spec.dim()));
    return {spec.field.canon(coords(0)), canon_vector(spec.field, coords.tail(spec.n))};
}

} // namespace rb
