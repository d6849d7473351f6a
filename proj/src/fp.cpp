#include "egf/fp.hpp"

#include <ostream>

namespace egf {

std::uint32_t Fp::p_ = 2;

void Fp::set_modulus(std::uint32_t p) {
    if (p < 2) throw InvariantError("field modulus must be at least 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvariantError("field modulus must be prime: " + std::to_string(p));
    p_ = p;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw InvariantError("division by zero in F_p");
    /* extended Euclid on (v, p) */
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Fp(x0);
}

std::string Fp::str() const { return std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace egf
