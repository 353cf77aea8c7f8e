#pragma once

#include <numeric>
#include <string>

#include "errors.hpp"

namespace ramify {

// ---------------------------------------------------------------------------
// Small integer number theory.  Everything in this library is exact machine
// arithmetic on desk-scale inputs; these helpers guard the ranges.
// ---------------------------------------------------------------------------

constexpr bool is_prime(int64 n) {
    if (n < 2) return false;
    for (int64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(int64 p) {
    if (p < 2 || p > (int64{1} << 31) || !is_prime(p))
        throw InvalidParameter("p must be a small prime, got " + std::to_string(p));
}

// b^e with an overflow guard; e >= 0.
inline int64 ipow_checked(int64 b, int64 e) {
    if (e < 0) throw InvalidParameter("negative exponent");
    int64 r = 1;
    for (int64 i = 0; i < e; ++i) {
        if (b != 0 && r > (int64{1} << 62) / (b < 0 ? -b : b))
            throw InvalidParameter("integer power overflow");
        r *= b;
    }
    return r;
}

inline int64 mod_inverse(int64 a, int64 m) {
    // extended Euclid; requires gcd(a, m) = 1
    int64 old_r = a % m, r = m;
    int64 old_s = 1, s = 0;
    while (r != 0) {
        const int64 q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
    }
    if (old_r != 1 && old_r != -1)
        throw NotAUnit(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    if (old_r == -1) old_s = -old_s;
    old_s %= m;
    return old_s < 0 ? old_s + m : old_s;
}

// ---------------------------------------------------------------------------
// Residue mod a small prime.  Elements are self-describing: each carries its
// modulus, so mixing moduli is a detected error rather than silent garbage.
// ---------------------------------------------------------------------------
class Fp {
public:
    Fp(int64 p, int64 value) : p_(p), v_(value % p) {
        if (p < 2) throw InvalidParameter("modulus must be >= 2");
        if (v_ < 0) v_ += p_;
    }

    int64 prime() const { return p_; }
    int64 value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ != 0; }

    Fp zero_like() const { return Fp(p_, 0); }
    Fp one_like() const { return Fp(p_, 1); }
    static Fp from_int(int64 k, const Fp& proto) { return Fp(proto.p_, k % proto.p_); }

    Fp inverse() const {
        if (v_ == 0) throw NotAUnit("inverse of 0 mod " + std::to_string(p_));
        return Fp(p_, mod_inverse(v_, p_));
    }

    friend void require_same_ring(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_)
            throw MismatchedPrime("operands live over different primes: " +
                                  std::to_string(a.p_) + " vs " + std::to_string(b.p_));
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        require_same_ring(a, b);
        return Fp(a.p_, a.v_ + b.v_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        require_same_ring(a, b);
        return Fp(a.p_, a.v_ - b.v_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        require_same_ring(a, b);
        return Fp(a.p_, a.v_ * b.v_);
    }
    Fp operator-() const { return Fp(p_, -v_); }

    friend bool operator==(const Fp&, const Fp&) = default;
    // ordering by (modulus, value); handy for containers of coefficient vectors
    friend auto operator<=>(const Fp&, const Fp&) = default;

private:
    int64 p_;
    int64 v_;
};

} // namespace ramify
