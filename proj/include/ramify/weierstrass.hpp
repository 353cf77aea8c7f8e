#pragma once

#include <vector>

#include "automorphism.hpp"
#include "cyclotomic.hpp"

namespace ramify {

// f = g * u with g monic of degree d, all non-leading coefficients of g in
// the maximal ideal, and u a unit; d equals the valuation of the residue
// series.  Exact modulo (T^N, the ring truncation).
struct DistinguishedFactorization {
    std::vector<LiftScalar> g;   // ascending coefficients, size degree + 1, leading term 1
    LiftSeries u;
    int64 degree;

    LiftSeries g_as_series(int precision) const;
    LiftScalar eval_g(const LiftScalar& x) const;
};

// Weierstrass preparation of f by successive approximation: split f into
// degree-< d and degree->= d parts and correct by the unit until the high
// error vanishes; the corrections live in increasing powers of the maximal
// ideal, which is nilpotent, so stabilization is exact.
DistinguishedFactorization weierstrass_preparation(const LiftSeries& f);

// sigma~(T) = zeta T / (1 + c T) for a unit c.  Its Moebius matrix
// [[zeta, 0], [c, 1]] has p-th power [[zeta^p, 0], [c(1+zeta+...+zeta^{p-1}), 1]],
// which is the identity, so the automorphism has exact order p; its reduction
// is t/(1 + c~ t), a wild automorphism of break 1.
LiftSeries homography_lift(int64 p, const LiftScalar& c, int precision);

// Weierstrass data of sigma~(T) - T: the horizontal divisor cut out by the
// fixed points of the lift.  Its degree equals break(reduction) + 1.
DistinguishedFactorization fixed_point_divisor(const LiftSeries& lifted);

} // namespace ramify
