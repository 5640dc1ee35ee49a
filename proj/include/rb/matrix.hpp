#pragma once

#include <Eigen/Core>

#include "rb/prime_field.hpp"
#include "rb/rational.hpp"

namespace rb {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

} // namespace rb

namespace Eigen {

template <>
struct NumTraits<rb::Rat> : GenericNumTraits<rb::Rat> {
    typedef rb::Rat Real;
    typedef rb::Rat NonInteger;
    typedef rb::Rat Nested;

    static inline Real epsilon() { return rb::Rat(0); }
    static inline Real dummy_precision() { return rb::Rat(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 40
    };
};

template <>
struct NumTraits<rb::Fp> : GenericNumTraits<rb::Fp> {
    typedef rb::Fp Real;
    typedef rb::Fp NonInteger;
    typedef rb::Fp Nested;

    static inline Real epsilon() { return rb::Fp(0); }
    static inline Real dummy_precision() { return rb::Fp(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 0,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2
    };
};

} // namespace Eigen
