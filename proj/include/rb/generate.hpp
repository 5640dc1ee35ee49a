#pragma once

#include <bit>
#include <cstdint>
#include <random>

#include "rb/classify.hpp"
#include "rb/linalg.hpp"

namespace rb {

/// Generation parameters. Identical config and generator arguments produce
/// identical output on every platform.
struct GenConfig {
    std::uint64_t seed = 0;
    long entry_bound = 10;  // max |numerator| and denominator of rational draws
};

/// Deterministic uniform draws on top of mt19937_64. Masked rejection keeps
/// draws exactly uniform; std::uniform_int_distribution is not used because
/// its output is implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n <= 1)
            return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            const std::uint64_t r = rng_() & mask;
            if (r < n)
                return r;
        }
    }

    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 rng_;
};

inline Rat random_scalar(const RationalField&, RandomSource& rs, long bound) {
    const long long num = rs.in_range(-bound, bound);
    const long long den = rs.in_range(1, bound);
    return Rat(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

inline Fp random_scalar(const PrimeField& f, RandomSource& rs, long /*bound*/) {
    return Fp(static_cast<long long>(rs.below(f.modulus())), f.modulus());
}

template <typename Field>
Matrix<typename Field::Scalar> random_matrix(const Field& f, Eigen::Index rows, Eigen::Index cols,
                                             RandomSource& rs, long bound) {
    Matrix<typename Field::Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = random_scalar(f, rs, bound);
    return m;
}

template <typename Field>
TruncElement<typename Field::Scalar> random_element(const AlgebraSpec<Field>& spec, RandomSource& rs,
                                                    long bound) {
    TruncElement<typename Field::Scalar> x = zero_element(spec);
    x.scalar = random_scalar(spec.field, rs, bound);
    for (Eigen::Index i = 0; i < spec.n; ++i)
        x.vec(i) = random_scalar(spec.field, rs, bound);
    return x;
}

/// Uniform rejection sampling: redraw until the matrix is invertible.
inline Matrix<Fp> random_invertible(const PrimeField& f, Eigen::Index n, RandomSource& rs, long bound) {
    for (;;) {
        Matrix<Fp> m = random_matrix(f, n, n, rs, bound);
        if (is_invertible(m))
            return m;
    }
}

/// Product of a unit lower and a unit upper triangular matrix with integer
/// off-diagonal entries in [-bound, bound]; the determinant is exactly 1 and
/// the inverse has integer entries, which keeps conjugation fraction-free.
inline Matrix<Rat> random_invertible(const RationalField& f, Eigen::Index n, RandomSource& rs,
                                     long bound) {
    Matrix<Rat> lower = Matrix<Rat>::Identity(n, n);
    Matrix<Rat> upper = Matrix<Rat>::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < i; ++j)
            lower(i, j) = f.from_int(static_cast<long>(rs.in_range(-bound, bound)));
        for (Eigen::Index j = i + 1; j < n; ++j)
            upper(i, j) = f.from_int(static_cast<long>(rs.in_range(-bound, bound)));
    }
    return lower * upper;
}

/// Square-zero matrix of exact rank r, built as S N S^-1 where N has ones at
/// positions (i, r+i). Requires 2r <= n: a square-zero matrix has
/// im L contained in ker L, so its rank cannot exceed n/2.
template <typename Field>
Matrix<typename Field::Scalar> random_square_zero(const Field& f, Eigen::Index n, Eigen::Index r,
                                                  RandomSource& rs, long bound) {
    using Scalar = typename Field::Scalar;
    if (r < 0 || 2 * r > n)
        throw InvalidDataError("square-zero rank must satisfy 0 <= 2r <= n; got r = " +
                               std::to_string(r) + ", n = " + std::to_string(n));
    Matrix<Scalar> nil = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < r; ++i)
        nil(i, r + i) = f.one();
    const Matrix<Scalar> s = random_invertible(f, n, rs, bound);
    return canon_matrix(f, s * nil * inverse(s));
}

/// Idempotent of exact rank r: S diag(I_r, 0) S^-1.
template <typename Field>
Matrix<typename Field::Scalar> random_idempotent(const Field& f, Eigen::Index n, Eigen::Index r,
                                                 RandomSource& rs, long bound) {
    using Scalar = typename Field::Scalar;
    if (r < 0 || r > n)
        throw InvalidDataError("idempotent rank must satisfy 0 <= r <= n; got r = " +
                               std::to_string(r) + ", n = " + std::to_string(n));
    Matrix<Scalar> proj = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < r; ++i)
        proj(i, i) = f.one();
    const Matrix<Scalar> s = random_invertible(f, n, rs, bound);
    return canon_matrix(f, s * proj * inverse(s));
}

/// Random element of ker L: a random coefficient combination of an exact
/// kernel basis. Returns the zero vector when the kernel is trivial.
template <typename Field>
Vector<typename Field::Scalar> random_kernel_vector(const Field& f,
                                                    const Matrix<typename Field::Scalar>& L,
                                                    RandomSource& rs, long bound) {
    using Scalar = typename Field::Scalar;
    const Matrix<Scalar> basis = kernel_basis(L);
    Vector<Scalar> v = Vector<Scalar>::Constant(L.cols(), f.zero());
    for (Eigen::Index k = 0; k < basis.cols(); ++k)
        v = v + random_scalar(f, rs, bound) * basis.col(k);
    return canon_vector(f, v);
}

template <typename Field>
Weight0Data<typename Field::Scalar> random_weight0_data(const Field& f, Eigen::Index n,
                                                        Eigen::Index rank_L, const GenConfig& cfg) {
    RandomSource rs(cfg.seed);
    auto L = random_square_zero(f, n, rank_L, rs, cfg.entry_bound);
    auto v0 = random_kernel_vector(f, L, rs, cfg.entry_bound);
    return {std::move(v0), std::move(L)};
}

template <typename Field>
Weight1Data<typename Field::Scalar> random_weight1_data(const Field& f, Eigen::Index n,
                                                        Eigen::Index rank_Q, long alpha,
                                                        const GenConfig& cfg) {
    if (alpha != 0 && alpha != -1)
        throw InvalidDataError("alpha must be 0 or -1, got " + std::to_string(alpha));
    RandomSource rs(cfg.seed);
    return {f.from_int(alpha), random_idempotent(f, n, rank_Q, rs, cfg.entry_bound)};
}

} // namespace rb
