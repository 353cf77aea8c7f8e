#include "ramify/weierstrass.hpp"

#include <string>
#include <utility>

namespace ramify {

namespace {

// f = L + T^d H with deg L < d; H is the tail shifted down by d, zero-padded
// at the top (the padding never feeds back into degrees below the precision).
std::pair<LiftSeries, LiftSeries> split_at(const LiftSeries& f, int64 d) {
    const int n = f.precision();
    std::vector<LiftScalar> low(static_cast<std::size_t>(n), f.proto().zero_like());
    std::vector<LiftScalar> high(static_cast<std::size_t>(n), f.proto().zero_like());
    for (int i = 0; i < n; ++i) {
        if (i < d)
            low[static_cast<std::size_t>(i)] = f.coeff(i);
        else
            high[static_cast<std::size_t>(i - static_cast<int>(d))] = f.coeff(i);
    }
    return {LiftSeries(std::move(low)), LiftSeries(std::move(high))};
}

} // namespace

LiftSeries DistinguishedFactorization::g_as_series(int precision) const {
    if (static_cast<int64>(precision) <= degree)
        throw InvalidParameter("precision too small to hold the distinguished polynomial");
    std::vector<LiftScalar> c(static_cast<std::size_t>(precision), u.proto().zero_like());
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = g[i];
    return LiftSeries(std::move(c));
}

LiftScalar DistinguishedFactorization::eval_g(const LiftScalar& x) const {
    LiftScalar acc = g.back();
    for (std::size_t i = g.size() - 1; i-- > 0;) acc = acc * x + g[i];
    return acc;
}

DistinguishedFactorization weierstrass_preparation(const LiftSeries& f) {
    const Valuation dv = valuation(reduce_series(f));
    if (!dv.is_finite())
        throw ReductionVanishes(
            "series vanishes mod the maximal ideal; preparation is undefined at this truncation");
    const int64 d = dv.value();
    const LiftScalar one = f.proto().one_like();
    const int n = f.precision();

    auto [low, high] = split_at(f, d);
    // the leading block starts with f_d, a unit since the residue has exact valuation d
    LiftSeries w = unit_inverse(high);       // w approximates u^{-1}
    LiftSeries e = mul(low, w);              // f w = T^d + e, exactly
    const int64 max_rounds = f.proto().valuation_bound() + 2;
    for (int64 round = 0;; ++round) {
        auto [le, he] = split_at(e, d);
        if (he.is_zero()) {
            std::vector<LiftScalar> g;
            g.reserve(static_cast<std::size_t>(d + 1));
            for (int64 i = 0; i < d; ++i) g.push_back(le.coeff(static_cast<int>(i)));
            g.push_back(one);
            DistinguishedFactorization fac{std::move(g), unit_inverse(w), d};
            for (int64 i = 0; i < d; ++i)
                if (!fac.g[static_cast<std::size_t>(i)].residue().is_zero())
                    throw Error("internal: non-leading coefficient of g is a unit");
            if (!(mul(fac.g_as_series(n), fac.u) == f))
                throw Error("internal: Weierstrass factors do not remultiply to f");
            return fac;
        }
        if (round > max_rounds)
            throw PrecisionExhausted("Weierstrass division did not stabilize within the nilpotency bound");
        // fold the high error back into the unit: f w = T^d (1 + he) + le
        const LiftSeries corr = unit_inverse(add(LiftSeries::constant(one, n), he));
        w = mul(w, corr);
        e = mul(le, corr);
    }
}

LiftSeries homography_lift(int64 p, const LiftScalar& c, int precision) {
    require_prime(p);
    if (c.prime() != p)
        throw MismatchedPrime("homography parameter lives over the wrong prime");
    if (!c.is_unit()) throw NotAUnit("homography parameter must be a unit");
    if (precision < 2) throw InvalidParameter("precision >= 2 required");
    const LiftScalar one = c.one_like();
    const LiftScalar zeta = LiftScalar::zeta_power(p, c.depth(), 1);
    const LiftSeries denom =
        add(LiftSeries::constant(one, precision), LiftSeries::monomial(c, 1, precision));
    return scale(shift_up(unit_inverse(denom)), zeta);
}

DistinguishedFactorization fixed_point_divisor(const LiftSeries& lifted) {
    if (lifted.precision() < 2 || !lifted.coeff(0).is_zero())
        throw InvalidParameter("expected an origin-preserving series");
    const DiskAutomorphism reduced(reduce_series(lifted));
    if (!reduced.wild()) throw NotWild("the reduction must be a wild automorphism");
    const int64 m = break_number(reduced);   // throws when the reduction masks the identity
    const LiftSeries t = lift_identity(lifted.proto().prime(), lifted.proto().depth(),
                                       lifted.precision());
    DistinguishedFactorization fac = weierstrass_preparation(sub(lifted, t));
    if (fac.degree != m + 1)
        throw Error("internal: fixed-point divisor degree must be break + 1");
    return fac;
}

} // namespace ramify
