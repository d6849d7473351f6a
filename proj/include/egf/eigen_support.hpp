#pragma once

#include <Eigen/Core>

#include "egf/fp.hpp"
#include "egf/rational.hpp"

/* NumTraits so Eigen dense matrices work over the exact scalars. Only the
 * ring operations are used; nothing here relies on magnitudes or norms. */
namespace Eigen {

template <>
struct NumTraits<egf::Fp> {
    using Real = egf::Fp;
    using NonInteger = egf::Fp;
    using Nested = egf::Fp;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4,
    };
    static int digits10() { return 10; }
    static egf::Fp epsilon() { return egf::Fp(0); }
    static egf::Fp dummy_precision() { return egf::Fp(0); }
    static egf::Fp highest() { return egf::Fp(egf::Fp::modulus() - 1); }
    static egf::Fp lowest() { return egf::Fp(0); }
};

template <>
struct NumTraits<egf::Rational> {
    using Real = egf::Rational;
    using NonInteger = egf::Rational;
    using Nested = egf::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8,
    };
    static int digits10() { return 18; }
    static egf::Rational epsilon() { return egf::Rational(0); }
    static egf::Rational dummy_precision() { return egf::Rational(0); }
};

}  // namespace Eigen

namespace egf {

using FMatrix = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using FVector = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace egf
