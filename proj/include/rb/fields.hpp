#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "rb/errors.hpp"
#include "rb/matrix.hpp"

namespace rb {

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0)
            return false;
    return true;
}

/// The field of rationals Q.
struct RationalField {
    using Scalar = Rat;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long v) const { return Rat(v); }
    Rat canon(const Rat& x) const { return x; }  // Rat is canonical by construction
    Rat parse(std::string_view text) const { return Rat::parse(text); }
    std::string to_string(const Rat& x) const { return x.to_string(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
    friend bool operator!=(const RationalField&, const RationalField&) { return false; }
};

/// A prime field F_p. Requires p an odd prime; p = 2 is rejected because
/// the identities this library checks rely on 2 being invertible.
class PrimeField {
public:
    using Scalar = Fp;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p == 2)
            throw InvalidDataError("F_2 is not supported: characteristic 2 breaks the identities checked here");
        if (p > 0x7fffffffull)
            throw InvalidDataError("prime modulus too large (must fit in 31 bits)");
        if (!is_prime(p))
            throw InvalidDataError("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(long v) const { return Fp(v, p_); }

    /// Binds unbound literals to p; rejects elements of a different field.
    Fp canon(const Fp& x) const {
        if (x.bound() && x.modulus() != p_)
            throw FieldMismatchError("element of F_" + std::to_string(x.modulus()) +
                                     " used in F_" + std::to_string(p_));
        return Fp(x.residue(), p_);
    }

    /// Accepts "a" or "a/b" with decimal integers of any size; reduces mod p.
    Fp parse(std::string_view text) const;

    std::string to_string(const Fp& x) const { return std::to_string(canon(x).residue()); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

inline Fp PrimeField::parse(std::string_view text) const {
    const auto reduce_part = [&](std::string_view part, bool allow_sign) -> Fp {
        if (!detail::is_decimal_integer(part, allow_sign))
            throw ParseError("invalid scalar '" + std::string(text) + "' for F_" + std::to_string(p_));
        const mpz_class z{std::string(part)};
        // mpz_fdiv_ui returns the nonnegative remainder even for negative z
        return Fp(static_cast<long long>(mpz_fdiv_ui(z.get_mpz_t(), p_)), p_);
    };

    const auto slash = text.find('/');
    const Fp num = reduce_part(text.substr(0, slash), true);
    if (slash == std::string_view::npos)
        return num;
    const Fp den = reduce_part(text.substr(slash + 1), false);
    if (den.residue() == 0)
        throw ParseError("invalid scalar '" + std::string(text) + "': denominator is zero in F_" +
                         std::to_string(p_));
    return num * inv(den);
}

using FieldSpec = std::variant<RationalField, PrimeField>;

inline std::string field_name(const FieldSpec& f) {
    if (std::holds_alternative<RationalField>(f))
        return "rational";
    return "F_" + std::to_string(std::get<PrimeField>(f).modulus());
}

/// Canonicalizes every entry through the field (binds prime-field literals).
template <typename Field, typename Derived>
Matrix<typename Field::Scalar> canon_matrix(const Field& f, const Eigen::MatrixBase<Derived>& m) {
    Matrix<typename Field::Scalar> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = f.canon(m(i, j));
    return out;
}

template <typename Field, typename Derived>
Vector<typename Field::Scalar> canon_vector(const Field& f, const Eigen::MatrixBase<Derived>& v) {
    Vector<typename Field::Scalar> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = f.canon(v(i));
    return out;
}

} // namespace rb
