#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "egf/errors.hpp"

namespace egf {

/* Element of the prime field F_p. The modulus is fixed once per session
 * (default p = 2) and shared by every value; mixing values from different
 * moduli in one computation is meaningless and not detected. */
class Fp {
  public:
    Fp() : v_(0) {}
    Fp(long long n) : v_(reduce(n)) {}

    static void set_modulus(std::uint32_t p);
    static std::uint32_t modulus() { return p_; }

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }
    Fp& operator+=(Fp o) {
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(Fp o) {
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(Fp o) {
        v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const;

    std::string str() const;

  private:
    static Fp from_raw(std::uint32_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static std::uint32_t reduce(long long n) {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    static std::uint32_t p_;
    std::uint32_t v_;
};

std::ostream& operator<<(std::ostream& os, Fp x);

}  // namespace egf
