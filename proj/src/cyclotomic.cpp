#include "ramify/cyclotomic.hpp"

#include <string>

namespace ramify {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

int64 checked_modulus(int64 p, int64 depth) {
    require_prime(p);
    if (depth < 1) throw InvalidParameter("depth must be >= 1");
    int64 pm = 1;
    for (int64 i = 0; i < depth; ++i) {
        if (pm > (int64{1} << 60) / p)
            throw InvalidParameter("p^M exceeds the supported range (p^M <= 2^60)");
        pm *= p;
    }
    return pm;
}

} // namespace

LiftScalar::LiftScalar(int64 p, int64 depth, std::vector<int64> coords)
    : p_(p), depth_(depth), pm_(checked_modulus(p, depth)), coords_(std::move(coords)) {
    if (static_cast<int64>(coords_.size()) > p_ - 1)
        throw InvalidParameter("a lift scalar has at most p-1 coordinates");
    coords_.resize(static_cast<std::size_t>(p_ - 1), 0);
    for (int64& c : coords_) {
        c %= pm_;
        if (c < 0) c += pm_;
    }
}

LiftScalar LiftScalar::zero(int64 p, int64 depth) { return LiftScalar(p, depth, {}); }

LiftScalar LiftScalar::one(int64 p, int64 depth) { return LiftScalar(p, depth, {1}); }

LiftScalar LiftScalar::from_int(int64 k, const LiftScalar& proto) {
    return LiftScalar(proto.p_, proto.depth_, {k % proto.pm_});
}

LiftScalar LiftScalar::zeta_power(int64 p, int64 depth, int64 e) {
    const LiftScalar z = zero(p, depth);
    int64 r = e % p;
    if (r < 0) r += p;
    std::vector<int64> coords(static_cast<std::size_t>(p - 1), 0);
    if (r < p - 1) {
        coords[static_cast<std::size_t>(r)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (int64& c : coords) c = z.pm_ - 1;
    }
    return LiftScalar(p, depth, std::move(coords));
}

bool LiftScalar::is_zero() const {
    for (int64 c : coords_)
        if (c != 0) return false;
    return true;
}

Fp LiftScalar::residue() const {
    u128 s = 0;
    for (int64 c : coords_) s += static_cast<u128>(c);
    return Fp(p_, static_cast<int64>(s % static_cast<u128>(p_)));
}

void require_same_ring(const LiftScalar& a, const LiftScalar& b) {
    if (a.p_ != b.p_)
        throw MismatchedPrime("lift scalars live over different primes: " +
                              std::to_string(a.p_) + " vs " + std::to_string(b.p_));
    if (a.depth_ != b.depth_)
        throw MismatchedDepth("lift scalars have different depths: " +
                              std::to_string(a.depth_) + " vs " + std::to_string(b.depth_));
}

LiftScalar operator+(const LiftScalar& a, const LiftScalar& b) {
    require_same_ring(a, b);
    std::vector<int64> out(a.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (a.coords_[i] + b.coords_[i]) % a.pm_;
    return LiftScalar(a.p_, a.depth_, std::move(out));
}

LiftScalar operator-(const LiftScalar& a, const LiftScalar& b) {
    require_same_ring(a, b);
    std::vector<int64> out(a.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (a.coords_[i] - b.coords_[i] + a.pm_) % a.pm_;
    return LiftScalar(a.p_, a.depth_, std::move(out));
}

LiftScalar LiftScalar::operator-() const {
    std::vector<int64> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coords_[i] == 0 ? 0 : pm_ - coords_[i];
    return LiftScalar(p_, depth_, std::move(out));
}

LiftScalar operator*(const LiftScalar& a, const LiftScalar& b) {
    require_same_ring(a, b);
    const std::size_t deg = a.coords_.size();           // p - 1
    const std::size_t p = static_cast<std::size_t>(a.p_);
    // convolve, fold zeta^p = 1, then eliminate the zeta^{p-1} slot via
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    std::vector<u128> acc(p, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            acc[(i + j) % p] += static_cast<u128>(a.coords_[i]) * static_cast<u128>(b.coords_[j]);
    }
    const u128 pm = static_cast<u128>(a.pm_);
    const int64 top = static_cast<int64>(acc[p - 1] % pm);
    std::vector<int64> out(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        int64 v = static_cast<int64>(acc[i] % pm) - top;
        if (v < 0) v += a.pm_;
        out[i] = v;
    }
    return LiftScalar(a.p_, a.depth_, std::move(out));
}

LiftScalar LiftScalar::inverse() const {
    const Fp r = residue();
    if (r.is_zero()) throw NotAUnit("not a unit: residue mod (zeta - 1, p) vanishes");
    const LiftScalar one = one_like();
    // Newton on the (zeta - 1)-adic filtration: x <- x (1 + e), e = 1 - a x
    LiftScalar x = from_int(r.inverse().value(), *this);
    for (int guard = 0;; ++guard) {
        const LiftScalar err = one - (*this) * x;
        if (err.is_zero()) return x;
        if (guard > 64) throw Error("internal: lift-scalar inversion failed to converge");
        x = x * (one + err);
    }
}

LiftScalar LiftScalar::divided_by_uniformizer() const {
    // Solve (zeta - 1) b = a in coordinates.  Writing x = b_{p-2}, the system
    // collapses to p x = -S with S the coordinate sum, then
    // b_i = -(a_0 + ... + a_i) - (i+1) x.
    u128 sum = 0;
    for (int64 c : coords_) sum += static_cast<u128>(c);
    const int64 s = static_cast<int64>(sum % static_cast<u128>(pm_));
    if (s % p_ != 0) throw Error("internal: uniformizer division needs a vanishing residue");
    const int64 x = ((pm_ - s) / p_) % pm_;
    std::vector<int64> b(coords_.size());
    i128 prefix = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        prefix += coords_[i];
        i128 v = -(prefix % pm_) - static_cast<i128>(i + 1) * x;
        v %= pm_;
        if (v < 0) v += pm_;
        b[i] = static_cast<int64>(v);
    }
    if (b.back() != x) throw Error("internal: uniformizer division is inconsistent");
    return LiftScalar(p_, depth_, std::move(b));
}

Valuation LiftScalar::valuation() const {
    const int64 bound = valuation_bound();
    if (is_zero()) return Valuation::at_least(bound);
    LiftScalar cur = *this;
    int64 v = 0;
    while (cur.residue().is_zero()) {
        cur = cur.divided_by_uniformizer();
        if (++v > bound) throw Error("internal: valuation exceeded the nilpotency bound");
    }
    return Valuation::finite(v);
}

TruncatedSeries reduce_series(const LiftSeries& f) {
    std::vector<Fp> out;
    out.reserve(f.coeffs().size());
    for (const LiftScalar& c : f.coeffs()) out.push_back(c.residue());
    return TruncatedSeries(std::move(out));
}

LiftSeries lift_identity(int64 p, int64 depth, int precision) {
    if (precision < 2) throw InvalidParameter("precision >= 2 required to represent T");
    return LiftSeries::monomial(LiftScalar::one(p, depth), 1, precision);
}

} // namespace ramify
