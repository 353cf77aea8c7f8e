#pragma once

#include <concepts>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "valuation.hpp"

namespace ramify {

// Coefficient requirements for Series<C>.  A coefficient knows its own ring
// (so incompatible operands are detectable), supports exact ring arithmetic,
// and can say whether it is zero or a unit.
template <class C>
concept CoefficientRing = requires(const C a, const C b, int64 k) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<C>;
    { a.zero_like() } -> std::convertible_to<C>;
    { a.one_like() } -> std::convertible_to<C>;
    { a.prime() } -> std::convertible_to<int64>;
    { C::from_int(k, a) } -> std::convertible_to<C>;
    requires requires { require_same_ring(a, b); };
};

// A power series known modulo t^N.  Exactly N coefficients are stored
// (index i holds the coefficient of t^i); the precision N is part of the
// value, and operands of different precision do not mix.  Values are
// immutable after construction and all operations are pure.
template <CoefficientRing C>
class Series {
public:
    explicit Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw InvalidParameter("a series needs precision >= 1");
        for (std::size_t i = 1; i < c_.size(); ++i) require_same_ring(c_[0], c_[i]);
    }

    static Series zero(const C& proto, int precision) {
        if (precision < 1) throw InvalidParameter("precision must be positive");
        return Series(std::vector<C>(static_cast<std::size_t>(precision), proto.zero_like()));
    }

    static Series constant(const C& value, int precision) {
        Series s = zero(value, precision);
        s.c_[0] = value;
        return s;
    }

    static Series monomial(const C& value, int degree, int precision) {
        if (degree < 0 || degree >= precision)
            throw InvalidParameter("monomial degree must lie in [0, precision)");
        Series s = zero(value, precision);
        s.c_[static_cast<std::size_t>(degree)] = value;
        return s;
    }

    int precision() const { return static_cast<int>(c_.size()); }

    const C& coeff(int i) const {
        if (i < 0 || i >= precision())
            throw InvalidParameter("coefficient index out of range");
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<C>& coeffs() const { return c_; }

    // any coefficient works as a ring carrier
    const C& proto() const { return c_[0]; }

    bool is_zero() const {
        for (const C& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

namespace detail {

template <CoefficientRing C>
void check_compatible(const Series<C>& a, const Series<C>& b) {
    require_same_ring(a.proto(), b.proto());
    if (a.precision() != b.precision())
        throw MismatchedPrecision("operands have precisions " + std::to_string(a.precision()) +
                                  " and " + std::to_string(b.precision()));
}

} // namespace detail

template <CoefficientRing C>
Series<C> add(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    std::vector<C> out;
    out.reserve(a.coeffs().size());
    for (int i = 0; i < a.precision(); ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return Series<C>(std::move(out));
}

template <CoefficientRing C>
Series<C> sub(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    std::vector<C> out;
    out.reserve(a.coeffs().size());
    for (int i = 0; i < a.precision(); ++i) out.push_back(a.coeff(i) - b.coeff(i));
    return Series<C>(std::move(out));
}

template <CoefficientRing C>
Series<C> negate(const Series<C>& a) {
    std::vector<C> out;
    out.reserve(a.coeffs().size());
    for (const C& c : a.coeffs()) out.push_back(-c);
    return Series<C>(std::move(out));
}

template <CoefficientRing C>
Series<C> scale(const Series<C>& a, const C& k) {
    require_same_ring(a.proto(), k);
    std::vector<C> out;
    out.reserve(a.coeffs().size());
    for (const C& c : a.coeffs()) out.push_back(k * c);
    return Series<C>(std::move(out));
}

// Cauchy product truncated at t^N.
template <CoefficientRing C>
Series<C> mul(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    const int n = a.precision();
    std::vector<C> out(static_cast<std::size_t>(n), a.proto().zero_like());
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j < n; ++j)
            out[static_cast<std::size_t>(i + j)] = out[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    }
    return Series<C>(std::move(out));
}

// multiply by t; the top coefficient falls off the precision window
template <CoefficientRing C>
Series<C> shift_up(const Series<C>& a) {
    std::vector<C> out;
    out.reserve(a.coeffs().size());
    out.push_back(a.proto().zero_like());
    for (int i = 0; i + 1 < a.precision(); ++i) out.push_back(a.coeff(i));
    return Series<C>(std::move(out));
}

template <CoefficientRing C>
Series<C> pow_truncated(const Series<C>& a, uint64 k) {
    Series<C> result = Series<C>::constant(a.proto().one_like(), a.precision());
    Series<C> base = a;
    while (k > 0) {
        if (k & 1u) result = mul(result, base);
        k >>= 1u;
        if (k) base = mul(base, base);
    }
    return result;
}

// Multiplicative inverse of a series with unit constant term, by the usual
// triangular recurrence: b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{j>=1} a_j b_{n-j}.
template <CoefficientRing C>
Series<C> unit_inverse(const Series<C>& f) {
    if (!f.coeff(0).is_unit()) throw NotAUnit("unit_inverse: constant term is not a unit");
    const int n = f.precision();
    const C inv0 = f.coeff(0).inverse();
    std::vector<C> out(static_cast<std::size_t>(n), f.proto().zero_like());
    out[0] = inv0;
    for (int k = 1; k < n; ++k) {
        C acc = f.proto().zero_like();
        for (int j = 1; j <= k; ++j) acc = acc + f.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = -(inv0 * acc);
    }
    return Series<C>(std::move(out));
}

// f(g(t)) mod t^N by Horner.  g must vanish at the origin so that the
// truncated composition is exact at precision N.
template <CoefficientRing C>
Series<C> compose(const Series<C>& f, const Series<C>& g) {
    detail::check_compatible(f, g);
    if (!g.coeff(0).is_zero())
        throw PositiveValuationRequired("compose: inner series must have positive valuation");
    const int n = f.precision();
    Series<C> acc = Series<C>::constant(f.coeff(n - 1), n);
    for (int i = n - 2; i >= 0; --i)
        acc = add(mul(acc, g), Series<C>::constant(f.coeff(i), n));
    return acc;
}

// k-fold self-composition of an origin-preserving series; k = 0 gives t.
template <CoefficientRing C>
Series<C> compose_power(const Series<C>& f, uint64 k) {
    if (f.precision() < 2)
        throw InvalidParameter("precision >= 2 required to represent the identity t");
    if (!f.coeff(0).is_zero())
        throw PositiveValuationRequired("compose_power: series must have positive valuation");
    Series<C> result = Series<C>::monomial(f.proto().one_like(), 1, f.precision());
    Series<C> base = f;
    while (k > 0) {
        if (k & 1u) result = compose(result, base);
        k >>= 1u;
        if (k) base = compose(base, base);
    }
    return result;
}

// Formal derivative.  The top coefficient of the input is unknown beyond the
// truncation, so the top output coefficient is set to zero; Newton-style
// callers only consume it where the slack lands beyond the precision.
template <CoefficientRing C>
Series<C> derivative(const Series<C>& f) {
    const int n = f.precision();
    std::vector<C> out(static_cast<std::size_t>(n), f.proto().zero_like());
    for (int i = 1; i < n; ++i)
        out[static_cast<std::size_t>(i - 1)] = C::from_int(i, f.proto()) * f.coeff(i);
    return Series<C>(std::move(out));
}

// Compositional inverse: g with f(g) = g(f) = t + O(t^N).  Newton iteration
// g <- g - (f(g) - t) / f'(g); the error valuation at least doubles per step.
template <CoefficientRing C>
Series<C> reversion(const Series<C>& f) {
    const int n = f.precision();
    if (!f.coeff(0).is_zero())
        throw NotReversible("reversion: constant term must vanish");
    if (n < 2 || !f.coeff(1).is_unit())
        throw NotReversible("reversion: linear coefficient must be a unit");
    const Series<C> t = Series<C>::monomial(f.proto().one_like(), 1, n);
    const Series<C> df = derivative(f);
    Series<C> g = Series<C>::monomial(f.coeff(1).inverse(), 1, n);
    for (int guard = 0;; ++guard) {
        const Series<C> err = sub(compose(f, g), t);
        if (err.is_zero()) break;
        if (guard > 2 * n) throw Error("internal: reversion failed to converge");
        g = sub(g, mul(err, unit_inverse(compose(df, g))));
    }
    return g;
}

// The unique g = 1 + O(t) with g^m = f, for f = 1 + O(t) and gcd(m, p) = 1.
// Newton iteration g <- g - (g^m - f) / (m g^{m-1}); m is a unit in the
// coefficient ring exactly because it is prime to the residue characteristic.
template <CoefficientRing C>
Series<C> nth_root(const Series<C>& f, int64 m) {
    if (m < 1) throw InvalidParameter("nth_root: m must be positive");
    if (std::gcd(m, f.proto().prime()) != 1)
        throw RootObstruction("nth_root: index must be prime to the characteristic");
    if (!(f.coeff(0) == f.proto().one_like()))
        throw RootObstruction("nth_root: series must have constant term 1");
    const int n = f.precision();
    const C m_el = C::from_int(m, f.proto());
    Series<C> g = Series<C>::constant(f.proto().one_like(), n);
    for (int guard = 0;; ++guard) {
        const Series<C> err = sub(pow_truncated(g, static_cast<uint64>(m)), f);
        if (err.is_zero()) break;
        if (guard > 2 * n) throw Error("internal: nth_root failed to converge");
        const Series<C> deriv = scale(pow_truncated(g, static_cast<uint64>(m - 1)), m_el);
        g = sub(g, mul(err, unit_inverse(deriv)));
    }
    return g;
}

// Smallest i with a nonzero stored coefficient of t^i; AtLeast(N) when all
// N stored coefficients vanish (truncation cannot tell 0 from valuation >= N).
template <CoefficientRing C>
Valuation valuation(const Series<C>& f) {
    for (int i = 0; i < f.precision(); ++i)
        if (!f.coeff(i).is_zero()) return Valuation::finite(i);
    return Valuation::at_least(f.precision());
}

template <CoefficientRing C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) { return add(a, b); }
template <CoefficientRing C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) { return sub(a, b); }
template <CoefficientRing C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) { return mul(a, b); }
template <CoefficientRing C>
Series<C> operator-(const Series<C>& a) { return negate(a); }

// ---------------------------------------------------------------------------
// Series over the prime field F_p: the carrier for sigma(t).
// ---------------------------------------------------------------------------
using TruncatedSeries = Series<Fp>;

// Convenience constructor from integer coefficients (reduced mod p; shorter
// lists are padded with zeros).
inline TruncatedSeries make_series(int64 p, int precision, const std::vector<int64>& coeffs) {
    require_prime(p);
    if (precision < 1) throw InvalidParameter("precision must be positive");
    if (static_cast<int>(coeffs.size()) > precision)
        throw InvalidParameter("more coefficients than the precision allows");
    std::vector<Fp> c;
    c.reserve(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i)
        c.emplace_back(p, i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : 0);
    return TruncatedSeries(std::move(c));
}

} // namespace ramify
