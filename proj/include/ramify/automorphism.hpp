#pragma once

#include <random>
#include <vector>

#include "filtration.hpp"
#include "series.hpp"

namespace ramify {

// An automorphism of k[t]/(t^N): a truncated series with sigma(0) = 0 and
// invertible linear coefficient.  Wild means linear coefficient exactly 1;
// the wild automorphisms form the p-Sylow part, and only they carry the
// ramification data computed here.
class DiskAutomorphism {
public:
    explicit DiskAutomorphism(TruncatedSeries s);

    static DiskAutomorphism identity(int64 p, int precision);

    const TruncatedSeries& series() const { return s_; }
    int64 p() const { return s_.proto().prime(); }
    int precision() const { return s_.precision(); }

    bool wild() const { return s_.coeff(1).value() == 1; }
    bool is_identity() const;

    friend bool operator==(const DiskAutomorphism&, const DiskAutomorphism&) = default;

private:
    TruncatedSeries s_;
};

// group law: t -> a(b(t))
DiskAutomorphism compose_auto(const DiskAutomorphism& a, const DiskAutomorphism& b);
DiskAutomorphism inverse_auto(const DiskAutomorphism& a);
DiskAutomorphism power(const DiskAutomorphism& a, uint64 k);

// Smallest e <= bound_exponent with a^(p^e) = id mod t^N; throws
// NotAPnTorsionElement when even a^(p^bound) is visibly not the identity.
// Every statement is modulo the stored precision.
int order_mod_precision(const DiskAutomorphism& a, int bound_exponent);

// Smallest e with a^(p^e) = id mod t^N.  Always exists: the wild part of the
// truncated automorphism group is a finite p-group.
int order_exponent(const DiskAutomorphism& a);

// b with a in G_b, a not in G_{b+1}: b = v(a(t) - t) - 1.
int64 break_number(const DiskAutomorphism& a);

// Jumps j_k = break of a^(p^k) for k < n, plus the derived |G_i| table.
// Requires exact order p^n mod precision.
FiltrationReport cyclic_filtration(const DiskAutomorphism& a, int n);

// sigma_m(t) = t (1 + t^m)^{-1/m}, for gcd(m, p) = 1.  Its iterates are
// sigma_m^k(t) = t (1 + k t^m)^{-1/m}, so it has exact order p and break m.
DiskAutomorphism sigma_m_example(int64 p, int64 m, int precision);
DiskAutomorphism sigma_m_example(int64 p, int64 m);

// Closed-form iterate t (1 + k t^m)^{-1/m}; the independent oracle for the
// sigma_m family.
DiskAutomorphism sigma_m_iterate(int64 p, int64 m, int64 k, int precision);

// uniformly random coefficients above the linear term
DiskAutomorphism random_wild(int64 p, int precision, std::mt19937_64& rng);

// Seeded randomized search for wild automorphisms of k[t]/(t^N) of order
// exactly p^exponent: draws random elements of the finite truncated group and
// powers them down to the requested order.  Deterministic for a fixed seed.
std::vector<DiskAutomorphism> search_wild_torsion(int64 p, int precision, int exponent,
                                                  int count, uint64 seed);

} // namespace ramify
