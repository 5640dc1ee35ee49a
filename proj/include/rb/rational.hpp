#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rb/errors.hpp"

namespace rb {

/// Exact rational scalar backed by GMP arbitrary-precision integers.
/// Always held in lowest terms with positive denominator, so equality is
/// plain comparison of canonical representations.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    explicit Rat(const mpz_class& z) : q_(z) {}

    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw DivisionByZeroError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rat(mpq_class q) : q_(std::move(q)) {
        if (q_.get_den() == 0)
            throw DivisionByZeroError("rational with zero denominator");
        q_.canonicalize();
    }

    /// Accepts "a" or "a/b" with decimal integers, b > 0.
    static Rat parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string to_string() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_), canonical{}); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_), canonical{}); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_), canonical{}); }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_), canonical{}); }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw DivisionByZeroError("rational division by zero");
        return Rat(mpq_class(a.q_ / b.q_), canonical{});
    }

    Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
    Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
    Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.to_string(); }

private:
    struct canonical {};
    Rat(mpq_class q, canonical) : q_(std::move(q)) {}  // GMP arithmetic keeps canonical form

    mpq_class q_;
};

inline Rat inv(const Rat& a) {
    if (a.is_zero())
        throw DivisionByZeroError("inverse of zero");
    return Rat(a.den(), a.num());
}

namespace detail {

// Strict decimal integer: optional leading '-', then digits only.
inline bool is_decimal_integer(std::string_view s, bool allow_sign) {
    if (allow_sign && s.size() > 1 && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace detail

inline Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (!detail::is_decimal_integer(num_part, true))
        throw ParseError("invalid rational '" + std::string(text) + "': expected \"a\" or \"a/b\"");
    if (slash == std::string_view::npos)
        return Rat(mpz_class(std::string(num_part)));

    const std::string_view den_part = text.substr(slash + 1);
    if (!detail::is_decimal_integer(den_part, false))
        throw ParseError("invalid rational '" + std::string(text) + "': denominator must be a positive integer");
    mpz_class den{std::string(den_part)};
    if (den == 0)
        throw ParseError("invalid rational '" + std::string(text) + "': denominator must be positive");
    return Rat(mpz_class(std::string(num_part)), den);
}

} // namespace rb
