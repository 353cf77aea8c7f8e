#pragma once

#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "series.hpp"
#include "valuation.hpp"

namespace ramify {

// Element of Z[zeta]/(Phi_p(zeta), p^M): coordinates in the power basis
// 1, zeta, ..., zeta^{p-2}, each stored mod p^M.  The ring is local with
// maximal ideal (zeta - 1); normalizing v(zeta - 1) = 1 gives v(p) = p - 1
// (Eisenstein), and (zeta - 1)^{M(p-1)} = 0, so valuations are defined up to
// the bound M(p-1) and flagged AtLeast beyond it.  Reduction mod the maximal
// ideal sends zeta to 1 and lands in F_p.
class LiftScalar {
public:
    LiftScalar(int64 p, int64 depth, std::vector<int64> coords);

    static LiftScalar zero(int64 p, int64 depth);
    static LiftScalar one(int64 p, int64 depth);
    static LiftScalar from_int(int64 k, const LiftScalar& proto);
    static LiftScalar zeta_power(int64 p, int64 depth, int64 e);

    int64 prime() const { return p_; }
    int64 depth() const { return depth_; }
    int64 modulus() const { return pm_; }   // p^M
    int64 valuation_bound() const { return depth_ * (p_ - 1); }
    const std::vector<int64>& coords() const { return coords_; }

    bool is_zero() const;
    // unit exactly when the residue mod (zeta - 1, p) is nonzero
    bool is_unit() const { return !residue().is_zero(); }

    LiftScalar zero_like() const { return zero(p_, depth_); }
    LiftScalar one_like() const { return one(p_, depth_); }

    // evaluate at zeta = 1 and reduce mod p
    Fp residue() const;

    LiftScalar inverse() const;

    // (zeta - 1)-adic valuation; AtLeast(M(p-1)) for the zero element
    Valuation valuation() const;

    friend void require_same_ring(const LiftScalar& a, const LiftScalar& b);

    friend LiftScalar operator+(const LiftScalar& a, const LiftScalar& b);
    friend LiftScalar operator-(const LiftScalar& a, const LiftScalar& b);
    friend LiftScalar operator*(const LiftScalar& a, const LiftScalar& b);
    LiftScalar operator-() const;

    friend bool operator==(const LiftScalar&, const LiftScalar&) = default;

private:
    // exact division by zeta - 1; callers ensure the residue vanishes
    LiftScalar divided_by_uniformizer() const;

    int64 p_;
    int64 depth_;
    int64 pm_;
    std::vector<int64> coords_;
};

// Series over the truncated cyclotomic ring: the carrier for lifted
// automorphisms sigma~(T) and their Weierstrass factors.
using LiftSeries = Series<LiftScalar>;

// coefficientwise reduction mod (zeta - 1, p): the passage from the lift back
// to the special fibre
TruncatedSeries reduce_series(const LiftSeries& f);

LiftSeries lift_identity(int64 p, int64 depth, int precision);

inline LiftSeries make_lift_series(int64 p, int64 depth, int precision,
                                   const std::vector<std::vector<int64>>& coeff_coords) {
    if (precision < 1) throw InvalidParameter("precision must be positive");
    if (static_cast<int>(coeff_coords.size()) > precision)
        throw InvalidParameter("more coefficients than the precision allows");
    std::vector<LiftScalar> c;
    c.reserve(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) {
        if (i < static_cast<int>(coeff_coords.size()))
            c.emplace_back(p, depth, coeff_coords[static_cast<std::size_t>(i)]);
        else
            c.push_back(LiftScalar::zero(p, depth));
    }
    return LiftSeries(std::move(c));
}

} // namespace ramify
