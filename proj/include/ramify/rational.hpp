#pragma once

#include <numeric>

#include "errors.hpp"

namespace ramify {

// Exact fraction on int64, always normalized: gcd(num, den) = 1, den > 0.
// No floating point anywhere; divisibility questions stay exact.
class Rational {
public:
    Rational(int64 num = 0, int64 den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw InvalidParameter("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const int64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    int64 num() const { return num_; }
    int64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    int64 num_;
    int64 den_;
};

} // namespace ramify
