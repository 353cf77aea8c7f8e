#pragma once

#include <string>

#include "errors.hpp"

namespace ramify {

// Order of vanishing, as far as truncated data can tell: either an exact
// finite value, or "at least B" when every stored coefficient vanishes.
// The two outcomes never mix; asking a flagged valuation for an exact value
// is an error.
class Valuation {
public:
    static Valuation finite(int64 v) { return Valuation(true, v); }
    static Valuation at_least(int64 bound) { return Valuation(false, bound); }

    bool is_finite() const { return finite_; }

    int64 value() const {
        if (!finite_)
            throw Error("valuation is only bounded below: AtLeast(" + std::to_string(v_) + ")");
        return v_;
    }

    int64 bound() const {
        if (finite_)
            throw Error("valuation is exact, not an AtLeast bound");
        return v_;
    }

    std::string str() const {
        return finite_ ? std::to_string(v_) : "AtLeast(" + std::to_string(v_) + ")";
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation(bool finite, int64 v) : finite_(finite), v_(v) {}
    bool finite_;
    int64 v_;
};

} // namespace ramify
