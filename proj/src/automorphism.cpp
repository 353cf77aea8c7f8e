#include "ramify/automorphism.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace ramify {

DiskAutomorphism::DiskAutomorphism(TruncatedSeries s) : s_(std::move(s)) {
    if (s_.precision() < 2)
        throw InvalidParameter("an automorphism needs precision >= 2");
    if (!s_.coeff(0).is_zero())
        throw InvalidParameter("an automorphism must fix the origin: sigma(0) = 0");
    if (!s_.coeff(1).is_unit())
        throw InvalidParameter("an automorphism needs an invertible linear coefficient");
}

DiskAutomorphism DiskAutomorphism::identity(int64 p, int precision) {
    require_prime(p);
    if (precision < 2) throw InvalidParameter("an automorphism needs precision >= 2");
    return DiskAutomorphism(TruncatedSeries::monomial(Fp(p, 1), 1, precision));
}

bool DiskAutomorphism::is_identity() const {
    if (s_.coeff(1).value() != 1) return false;
    for (int i = 0; i < s_.precision(); ++i)
        if (i != 1 && !s_.coeff(i).is_zero()) return false;
    return true;
}

DiskAutomorphism compose_auto(const DiskAutomorphism& a, const DiskAutomorphism& b) {
    return DiskAutomorphism(compose(a.series(), b.series()));
}

DiskAutomorphism inverse_auto(const DiskAutomorphism& a) {
    return DiskAutomorphism(reversion(a.series()));
}

DiskAutomorphism power(const DiskAutomorphism& a, uint64 k) {
    return DiskAutomorphism(compose_power(a.series(), k));
}

int order_mod_precision(const DiskAutomorphism& a, int bound_exponent) {
    if (bound_exponent < 0) throw InvalidParameter("bound exponent must be nonnegative");
    if (!a.wild()) throw NotWild("order statements are p-powers only for wild automorphisms");
    DiskAutomorphism b = a;
    for (int e = 0; e <= bound_exponent; ++e) {
        if (b.is_identity()) return e;
        b = power(b, static_cast<uint64>(a.p()));
    }
    throw NotAPnTorsionElement("order exceeds p^" + std::to_string(bound_exponent) +
                               " at precision " + std::to_string(a.precision()));
}

int order_exponent(const DiskAutomorphism& a) {
    if (!a.wild()) throw NotWild("order statements are p-powers only for wild automorphisms");
    DiskAutomorphism b = a;
    // each p-th power strictly deepens the break, so the loop ends within N steps
    for (int e = 0; e <= a.precision(); ++e) {
        if (b.is_identity()) return e;
        b = power(b, static_cast<uint64>(a.p()));
    }
    throw Error("internal: wild truncated automorphism of unexpectedly large order");
}

int64 break_number(const DiskAutomorphism& a) {
    if (!a.wild()) throw NotWild("break numbers are defined for wild automorphisms");
    const TruncatedSeries t = TruncatedSeries::monomial(Fp(a.p(), 1), 1, a.precision());
    const Valuation v = valuation(sub(a.series(), t));
    if (!v.is_finite())
        throw IndistinguishableFromIdentity("sigma(t) - t vanishes to the stored precision");
    return v.value() - 1;
}

FiltrationReport cyclic_filtration(const DiskAutomorphism& a, int n) {
    if (n < 0) throw InvalidParameter("exponent must be nonnegative");
    if (!a.wild()) throw NotWild("filtrations are computed for wild automorphisms");
    const int64 p = a.p();
    if (n == 0) {
        if (!a.is_identity()) throw WrongOrder("a nontrivial element has no exponent-0 filtration");
        return FiltrationReport::from_jumps(p, {}, a.precision());
    }
    std::vector<int64> jumps;
    DiskAutomorphism b = a;
    for (int k = 0; k < n; ++k) {
        if (b.is_identity())
            throw InsufficientPrecision("sigma^(p^" + std::to_string(k) +
                                        ") already looks like the identity at precision " +
                                        std::to_string(a.precision()));
        jumps.push_back(break_number(b));
        if (k > 0 && jumps[static_cast<std::size_t>(k)] <= jumps[static_cast<std::size_t>(k - 1)])
            throw Error("internal: breaks of successive p-th powers must strictly increase");
        b = power(b, static_cast<uint64>(p));
    }
    if (!b.is_identity())
        throw WrongOrder("element order exceeds p^" + std::to_string(n) + " at this precision");
    return FiltrationReport::from_jumps(p, std::move(jumps), a.precision());
}

DiskAutomorphism sigma_m_example(int64 p, int64 m, int precision) {
    require_prime(p);
    if (m < 1) throw InvalidParameter("m must be positive");
    if (std::gcd(m, p) != 1) throw RootObstruction("sigma_m needs gcd(m, p) = 1");
    if (m > (std::numeric_limits<int>::max() - 4) / p)
        throw InvalidParameter("m * p out of range");
    if (precision <= m * p)
        throw InsufficientPrecision("precision must exceed m*p so order and break are visible");
    return sigma_m_iterate(p, m, 1, precision);
}

DiskAutomorphism sigma_m_example(int64 p, int64 m) {
    require_prime(p);
    if (m < 1) throw InvalidParameter("m must be positive");
    if (m > (std::numeric_limits<int>::max() - 4) / p)
        throw InvalidParameter("m * p out of range");
    return sigma_m_example(p, m, static_cast<int>(m * p + 4));
}

DiskAutomorphism sigma_m_iterate(int64 p, int64 m, int64 k, int precision) {
    require_prime(p);
    if (m < 1) throw InvalidParameter("m must be positive");
    if (std::gcd(m, p) != 1) throw RootObstruction("the iterate formula needs gcd(m, p) = 1");
    if (precision <= m) throw InsufficientPrecision("precision must exceed m");
    const Fp one(p, 1);
    // 1 + k t^m
    TruncatedSeries base = add(TruncatedSeries::constant(one, precision),
                               TruncatedSeries::monomial(Fp(p, k), static_cast<int>(m), precision));
    return DiskAutomorphism(shift_up(unit_inverse(nth_root(base, m))));
}

DiskAutomorphism random_wild(int64 p, int precision, std::mt19937_64& rng) {
    require_prime(p);
    if (precision < 2) throw InvalidParameter("an automorphism needs precision >= 2");
    std::vector<int64> c(static_cast<std::size_t>(precision), 0);
    c[1] = 1;
    // rng() % p keeps draws portable across standard library implementations
    for (int i = 2; i < precision; ++i)
        c[static_cast<std::size_t>(i)] = static_cast<int64>(rng() % static_cast<uint64>(p));
    return DiskAutomorphism(make_series(p, precision, c));
}

std::vector<DiskAutomorphism> search_wild_torsion(int64 p, int precision, int exponent,
                                                  int count, uint64 seed) {
    require_prime(p);
    if (exponent < 1) throw InvalidParameter("search exponent must be >= 1");
    if (count < 1) throw InvalidParameter("search count must be >= 1");
    if (precision < exponent + 2)
        throw InvalidParameter("precision too small to show p^exponent torsion");
    std::mt19937_64 rng(seed);
    std::vector<DiskAutomorphism> found;
    std::set<std::vector<int64>> seen;
    const long max_attempts = 20000L * count;
    for (long attempt = 0; attempt < max_attempts && static_cast<int>(found.size()) < count;
         ++attempt) {
        const DiskAutomorphism tau = random_wild(p, precision, rng);
        const int e = order_exponent(tau);
        if (e < exponent) continue;
        // power down: tau^(p^(e - exponent)) has order exactly p^exponent
        DiskAutomorphism sigma = tau;
        for (int i = 0; i < e - exponent; ++i) sigma = power(sigma, static_cast<uint64>(p));
        std::vector<int64> key;
        key.reserve(sigma.series().coeffs().size());
        for (const Fp& c : sigma.series().coeffs()) key.push_back(c.value());
        if (seen.insert(std::move(key)).second) found.push_back(sigma);
    }
    if (static_cast<int>(found.size()) < count)
        throw SearchExhausted("could not find " + std::to_string(count) +
                              " distinct elements of order p^" + std::to_string(exponent));
    return found;
}

} // namespace ramify
