#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "rb/errors.hpp"

namespace rb {

/// Element of a prime field F_p, stored as the canonical residue in [0, p).
///
/// Each element carries its modulus. A default-constructed element has
/// modulus 0 and acts as an unbound integer literal that adopts the other
/// operand's modulus on first use; Eigen's generic kernels materialize
/// Scalar(0)/Scalar(1) this way. Combining two elements bound to different
/// moduli throws FieldMismatchError.
class Fp {
public:
    Fp() = default;
    Fp(int v) : v_(v) {}
    Fp(long v) : v_(v) {}
    Fp(long long v) : v_(v) {}

    Fp(long long v, std::uint32_t p) : v_(reduce(v, p)), p_(p) {}

    bool bound() const { return p_ != 0; }
    std::uint32_t modulus() const { return p_; }

    /// Canonical residue for bound elements; the raw literal otherwise.
    std::int64_t residue() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) { return binop(a, b, [](std::int64_t x, std::int64_t y) { return x + y; }); }
    friend Fp operator-(const Fp& a, const Fp& b) { return binop(a, b, [](std::int64_t x, std::int64_t y) { return x - y; }); }
    friend Fp operator*(const Fp& a, const Fp& b) { return binop(a, b, [](std::int64_t x, std::int64_t y) { return x * y; }); }
    friend Fp operator-(const Fp& a) { return a.p_ ? Fp(-a.v_, a.p_) : Fp(-a.v_); }
    friend Fp operator/(const Fp& a, const Fp& b);

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        const std::uint32_t m = join(a.p_, b.p_);
        if (m == 0)
            return a.v_ == b.v_;
        return reduce(a.v_, m) == reduce(b.v_, m);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

    friend Fp inv(const Fp& a);

private:
    static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return r < 0 ? r + p : r;
    }

    static std::uint32_t join(std::uint32_t a, std::uint32_t b) {
        if (a == 0)
            return b;
        if (b == 0)
            return a;
        if (a != b)
            throw FieldMismatchError("mixing elements of F_" + std::to_string(a) + " and F_" + std::to_string(b));
        return a;
    }

    template <typename Op>
    static Fp binop(const Fp& a, const Fp& b, Op op) {
        const std::uint32_t m = join(a.p_, b.p_);
        if (m == 0)
            return Fp(op(a.v_, b.v_));
        return Fp(op(reduce(a.v_, m), reduce(b.v_, m)), m);
    }

    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;  // 0 = unbound
};

inline Fp inv(const Fp& a) {
    if (!a.bound()) {
        if (a.v_ == 1 || a.v_ == -1)
            return a;
        throw FieldMismatchError("cannot invert a scalar not bound to a field");
    }
    const std::int64_t m = a.p_;
    std::int64_t r = Fp::reduce(a.v_, a.p_);
    if (r == 0)
        throw DivisionByZeroError("inverse of zero in F_" + std::to_string(a.p_));
    // extended Euclid: u*r0 + _*m = gcd = 1
    std::int64_t u = 1, v = 0, x = r, y = m;
    while (y != 0) {
        const std::int64_t q = x / y;
        const std::int64_t t = u - q * v;
        u = v;
        v = t;
        const std::int64_t z = x - q * y;
        x = y;
        y = z;
    }
    return Fp(u, a.p_);
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

} // namespace rb
