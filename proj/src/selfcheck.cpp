#include "ramify/selfcheck.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ramify/automorphism.hpp"
#include "ramify/cyclotomic.hpp"
#include "ramify/json_io.hpp"
#include "ramify/oort.hpp"
#include "ramify/ramification.hpp"
#include "ramify/weierstrass.hpp"

namespace ramify {

namespace {

struct Budget {
    int random_cases;
    std::vector<int64> sigma_primes;
    int64 sigma_m_max;
    std::vector<int64> profile_primes;
    int64 max_jump;
    int search_count;
    int search_precision;
    std::vector<int64> lift_primes;
    int64 oracle_max_points;
    int64 lift_depth;
    int lift_precision;
};

Budget budget_for(const std::string& name) {
    if (name == "quick")
        return Budget{15, {2, 3}, 5, {2, 3}, 20, 3, 32, {2, 3}, 24, 4, 12};
    if (name == "default")
        return Budget{50, {2, 3, 5, 7}, 10, {2, 3}, 40, 5, 64, {2, 3, 5}, 40, 6, 16};
    if (name == "deep")
        return Budget{150, {2, 3, 5, 7}, 12, {2, 3, 5}, 60, 8, 64, {2, 3, 5, 7}, 60, 6, 20};
    throw InvalidParameter("budget must be quick, default or deep");
}

int64 draw(std::mt19937_64& rng, int64 bound) {
    return static_cast<int64>(rng() % static_cast<uint64>(bound));
}

TruncatedSeries random_series(int64 p, int precision, std::mt19937_64& rng) {
    std::vector<int64> c(static_cast<std::size_t>(precision));
    for (int64& v : c) v = draw(rng, p);
    return make_series(p, precision, c);
}

LiftScalar random_lift_scalar(int64 p, int64 depth, std::mt19937_64& rng) {
    const LiftScalar zero = LiftScalar::zero(p, depth);
    std::vector<int64> coords(static_cast<std::size_t>(p - 1));
    for (int64& v : coords) v = draw(rng, zero.modulus());
    return LiftScalar(p, depth, std::move(coords));
}

void fail(CheckResult& r, const std::string& detail) {
    r.pass = false;
    if (r.detail.empty()) r.detail = detail;
}

// ---- individual sweeps ----------------------------------------------------

void series_ring_laws(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5, 7, 97};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 5)];
        const int n = 2 + static_cast<int>(draw(rng, 14));
        const TruncatedSeries a = random_series(p, n, rng);
        const TruncatedSeries b = random_series(p, n, rng);
        const TruncatedSeries d = random_series(p, n, rng);
        const TruncatedSeries zero = TruncatedSeries::zero(Fp(p, 0), n);
        const TruncatedSeries one = TruncatedSeries::constant(Fp(p, 1), n);
        ++r.cases;
        if (!(add(a, b) == add(b, a))) fail(r, "addition is not commutative");
        if (!(add(add(a, b), d) == add(a, add(b, d)))) fail(r, "addition is not associative");
        if (!(mul(a, b) == mul(b, a))) fail(r, "multiplication is not commutative");
        if (!(mul(mul(a, b), d) == mul(a, mul(b, d)))) fail(r, "multiplication is not associative");
        if (!(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)))) fail(r, "distributivity fails");
        if (!(add(a, zero) == a)) fail(r, "zero is not neutral");
        if (!(mul(a, one) == a)) fail(r, "one is not neutral");
        if (!(add(a, negate(a)) == zero)) fail(r, "negation is not an inverse");
    }
}

void series_unit_inverse(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5, 7};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 4)];
        const int n = 2 + static_cast<int>(draw(rng, 14));
        std::vector<int64> coeffs(static_cast<std::size_t>(n));
        coeffs[0] = 1 + draw(rng, p - 1);
        for (int i = 1; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = draw(rng, p);
        const TruncatedSeries a = make_series(p, n, coeffs);
        ++r.cases;
        if (!(mul(a, unit_inverse(a)) == TruncatedSeries::constant(Fp(p, 1), n)))
            fail(r, "a * a^{-1} != 1 over p=" + std::to_string(p));
    }
}

void series_compose_associative(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 3 + static_cast<int>(draw(rng, 12));
        const TruncatedSeries f = random_series(p, n, rng);
        TruncatedSeries g = shift_up(random_series(p, n, rng));
        TruncatedSeries h = shift_up(random_series(p, n, rng));
        ++r.cases;
        if (!(compose(compose(f, g), h) == compose(f, compose(g, h))))
            fail(r, "composition is not associative");
    }
}

void series_valuation_law(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 2 + static_cast<int>(draw(rng, 14));
        const TruncatedSeries a = random_series(p, n, rng);
        const TruncatedSeries b = random_series(p, n, rng);
        const Valuation va = valuation(a), vb = valuation(b), vab = valuation(mul(a, b));
        ++r.cases;
        if (va.is_finite() && vb.is_finite() && va.value() + vb.value() < n) {
            if (!(vab == Valuation::finite(va.value() + vb.value())))
                fail(r, "v(ab) != v(a) + v(b) over the prime field");
        } else if (!(vab == Valuation::at_least(n))) {
            fail(r, "v(ab) should be AtLeast(N) when the sum exceeds the window");
        }
    }
}

void series_nth_root_roundtrip(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5, 7};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 4)];
        int64 m = 1 + draw(rng, 6);
        while (std::gcd(m, p) != 1) ++m;
        const int n = 4 + static_cast<int>(draw(rng, 12));
        std::vector<int64> coeffs(static_cast<std::size_t>(n));
        coeffs[0] = 1;
        for (int i = 1; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = draw(rng, p);
        const TruncatedSeries f = make_series(p, n, coeffs);
        ++r.cases;
        if (!(pow_truncated(nth_root(f, m), static_cast<uint64>(m)) == f))
            fail(r, "nth_root(f, m)^m != f for m=" + std::to_string(m));
    }
}

void series_reversion_roundtrip(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 3 + static_cast<int>(draw(rng, 12));
        std::vector<int64> coeffs(static_cast<std::size_t>(n), 0);
        coeffs[1] = 1 + draw(rng, p - 1);
        for (int i = 2; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = draw(rng, p);
        const TruncatedSeries f = make_series(p, n, coeffs);
        const TruncatedSeries g = reversion(f);
        const TruncatedSeries t = TruncatedSeries::monomial(Fp(p, 1), 1, n);
        ++r.cases;
        if (!(compose(f, g) == t) || !(compose(g, f) == t))
            fail(r, "reversion is not a two-sided compositional inverse");
    }
}

void auto_group_laws(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 4 + static_cast<int>(draw(rng, 12));
        const DiskAutomorphism a = random_wild(p, n, rng);
        const DiskAutomorphism b = random_wild(p, n, rng);
        const DiskAutomorphism d = random_wild(p, n, rng);
        ++r.cases;
        if (!(compose_auto(compose_auto(a, b), d) == compose_auto(a, compose_auto(b, d))))
            fail(r, "group law is not associative");
        if (!compose_auto(a, b).wild()) fail(r, "wild elements are not closed under composition");
        if (!compose_auto(a, inverse_auto(a)).is_identity() ||
            !compose_auto(inverse_auto(a), a).is_identity())
            fail(r, "reversion is not a group inverse");
    }
}

void auto_conjugation_break(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 5 + static_cast<int>(draw(rng, 12));
        DiskAutomorphism a = random_wild(p, n, rng);
        if (a.is_identity()) a = sigma_m_example(p, 1, n);
        const DiskAutomorphism tau = random_wild(p, n, rng);
        const DiskAutomorphism conj = compose_auto(compose_auto(tau, a), inverse_auto(tau));
        ++r.cases;
        if (break_number(conj) != break_number(a))
            fail(r, "break number is not conjugation invariant");
    }
}

void auto_sigma_family(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.sigma_primes) {
        for (int64 m = 1; m <= B.sigma_m_max; ++m) {
            if (std::gcd(m, p) != 1) continue;
            const int precision = static_cast<int>(m * p + 4);
            const DiskAutomorphism sigma = sigma_m_example(p, m, precision);
            ++r.cases;
            if (order_mod_precision(sigma, 1) != 1)
                fail(r, "sigma_m should have order exactly p (p=" + std::to_string(p) +
                            ", m=" + std::to_string(m) + ")");
            if (break_number(sigma) != m)
                fail(r, "sigma_m should have break m (p=" + std::to_string(p) +
                            ", m=" + std::to_string(m) + ")");
            // iterates against the closed form t (1 + k t^m)^{-1/m}
            DiskAutomorphism pow_k = sigma;
            for (int64 k = 2; k < p; ++k) {
                pow_k = compose_auto(pow_k, sigma);
                if (!(pow_k == sigma_m_iterate(p, m, k, precision)))
                    fail(r, "iterate formula mismatch at k=" + std::to_string(k));
            }
        }
    }
}

void auto_break_monotonicity(CheckResult& r, const Budget& B, std::mt19937_64&) {
    const std::vector<DiskAutomorphism> fixtures =
        search_wild_torsion(2, B.search_precision, 2, B.search_count, 0x5eedULL);
    for (const DiskAutomorphism& a : fixtures) {
        ++r.cases;
        if (break_number(power(a, 2)) <= break_number(a))
            fail(r, "break of sigma^p must exceed break of sigma");
    }
}

void auto_search_hasse_arf(CheckResult& r, const Budget& B, std::mt19937_64&) {
    const std::vector<DiskAutomorphism> fixtures =
        search_wild_torsion(2, B.search_precision, 2, B.search_count, 0xbadc0deULL);
    for (const DiskAutomorphism& a : fixtures) {
        const FiltrationReport fr = cyclic_filtration(a, 2);
        const HasseArfVerdict verdict = hasse_arf_holds(fr.jump_profile());
        ++r.cases;
        if (!verdict.pass) fail(r, "searched order-p^2 element violates the jump congruence");
        if ((fr.jumps()[1] - fr.jumps()[0]) % 2 != 0) fail(r, "j_1 != j_0 mod 2");
    }
}

void profile_equivalence(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.profile_primes) {
        for (int n = 1; n <= 3; ++n) {
            for (const std::vector<int64>& jumps : enumerate_jump_vectors(n, B.max_jump)) {
                const JumpProfile jp(p, jumps);
                const HasseArfVerdict verdict = hasse_arf_holds(jp);
                bool upper_integral = true;
                for (const Rational& u : herbrand_upper_jumps(jp))
                    if (!u.is_integer()) upper_integral = false;
                bool translates = true;
                int violation = -1;
                try {
                    (void)jumps_to_orbits(jp);
                } catch (const HasseArfViolation& e) {
                    translates = false;
                    violation = e.index;
                }
                ++r.cases;
                if (verdict.pass != upper_integral)
                    fail(r, "divisibility and Herbrand integrality disagree");
                if (verdict.pass != translates)
                    fail(r, "divisibility and orbit translation disagree");
                if (!verdict.pass && violation != *verdict.violation_index)
                    fail(r, "violation indices disagree");
            }
        }
    }
}

void profile_artin_different(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.profile_primes) {
        for (int n = 1; n <= 3; ++n) {
            for (const std::vector<int64>& jumps : enumerate_jump_vectors(n, B.max_jump)) {
                const FiltrationReport fr = FiltrationReport::from_jumps(p, jumps, jumps.back() + 2);
                const ArtinTable at = artin_table(fr);
                ++r.cases;
                if (different_valuation(fr) != at.at_identity())
                    fail(r, "different valuation != ar(1)");
                int64 trace = at.at_identity();
                for (const ArtinClass& cls : at.classes()) trace += cls.size * cls.value;
                if (trace != 0) fail(r, "class-weighted trace of ar is nonzero");
            }
        }
    }
}

void oort_round_trip(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.profile_primes) {
        for (int n = 1; n <= 3; ++n) {
            for (const std::vector<int64>& jumps : enumerate_jump_vectors(n, B.max_jump)) {
                const JumpProfile jp(p, jumps);
                if (!hasse_arf_holds(jp).pass) continue;
                const OrbitProfile op = jumps_to_orbits(jp);
                ++r.cases;
                if (!(orbits_to_jumps(op) == jp)) fail(r, "orbit round trip is not the identity");
                // j_k = i_0 + i_1 p + ... + i_k p^k with the level-0 count s_0 - 1
                int64 acc = 0;
                for (int k = 0; k < op.n(); ++k) {
                    acc += op.orbit_count(k) * ipow_checked(p, k);
                    if (acc != jp.jump(k)) fail(r, "orbit counts do not reproduce the jumps");
                }
            }
        }
    }
}

void oort_identity_and_genus(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.profile_primes) {
        for (int n = 1; n <= 3; ++n) {
            for (const std::vector<int64>& jumps : enumerate_jump_vectors(n, B.max_jump)) {
                const JumpProfile jp(p, jumps);
                if (!hasse_arf_holds(jp).pass) continue;
                const FiltrationReport fr = FiltrationReport::from_jumps(p, jumps, jumps.back() + 2);
                const OrbitProfile op = jumps_to_orbits(jp);
                ++r.cases;
                if (!verify_artin_identity(fr, op).pass)
                    fail(r, "two-fibre Artin identity fails on a constructed pair");
                if (!different_balance(fr, op).balanced)
                    fail(r, "different balance fails on a constructed pair");
                if (p == 2 && jumps[0] % 2 == 0) {
                    try {
                        (void)genus_check(fr, op);
                        fail(r, "even leading jump at p=2 must give a non-integral genus");
                    } catch (const NonIntegralGenus&) {
                    }
                } else {
                    const GenusCheck g = genus_check(fr, op);
                    if (!g.balanced) fail(r, "genus is unbalanced on a constructed pair");
                    if (g.genus < 0) fail(r, "negative genus");
                    // bumping the last jump by p^{n-1} keeps validity and cannot shrink g
                    std::vector<int64> bumped = jumps;
                    bumped.back() += ipow_checked(p, n - 1);
                    if (!(p == 2 && bumped[0] % 2 == 0)) {
                        const JumpProfile jb(p, bumped);
                        const FiltrationReport frb =
                            FiltrationReport::from_jumps(p, bumped, bumped.back() + 2);
                        if (genus_check(frb, jumps_to_orbits(jb)).genus < g.genus)
                            fail(r, "genus decreased under a jump bump");
                    }
                }
            }
        }
    }
}

void oort_oracle_agreement(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.profile_primes) {
        for (int n = 1; n <= 3; ++n) {
            if (ipow_checked(p, n) > 27) continue;
            const std::vector<OracleEntry> oracle = brute_force_orbit_oracle(p, n, B.oracle_max_points);
            std::set<std::vector<int64>> oracle_jumps;
            for (const OracleEntry& e : oracle) {
                ++r.cases;
                oracle_jumps.insert(e.jumps);
                const JumpProfile jp(p, e.jumps);
                if (!hasse_arf_holds(jp).pass)
                    fail(r, "oracle emitted a profile the verdict rejects");
                if (!(jumps_to_orbits(jp).counts() == e.counts))
                    fail(r, "oracle counts disagree with jumps_to_orbits");
            }
            // completeness: every accepted profile within the budget appears
            for (const std::vector<int64>& jumps : enumerate_jump_vectors(n, B.oracle_max_points - 1)) {
                const JumpProfile jp(p, jumps);
                if (!hasse_arf_holds(jp).pass) continue;
                if (jumps.back() + 1 > B.oracle_max_points) continue;
                if (!oracle_jumps.count(jumps)) fail(r, "oracle missed an accepted profile");
            }
        }
    }
}

void lift_scalar_laws(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    for (int64 p : B.lift_primes) {
        const int64 M = B.lift_depth;
        const LiftScalar zero = LiftScalar::zero(p, M);
        const LiftScalar one = LiftScalar::one(p, M);
        const LiftScalar zeta = LiftScalar::zeta_power(p, M, 1);
        const LiftScalar pi = zeta - one;
        // zeta^p = 1 and 1 + zeta + ... + zeta^{p-1} = 0
        LiftScalar zp = one, phi = zero;
        for (int64 e = 0; e < p; ++e) phi = phi + LiftScalar::zeta_power(p, M, e);
        for (int64 e = 0; e < p; ++e) zp = zp * zeta;
        ++r.cases;
        if (!(zp == one)) fail(r, "zeta^p != 1");
        if (!phi.is_zero()) fail(r, "Phi_p(zeta) != 0");
        if (!(pi.valuation() == Valuation::finite(1))) fail(r, "v(zeta - 1) != 1");
        if (!(LiftScalar::from_int(p, one).valuation() == Valuation::finite(p - 1)))
            fail(r, "v(p) != p - 1");
        if (!(zero.valuation() == Valuation::at_least(M * (p - 1))))
            fail(r, "v(0) should be AtLeast(M(p-1))");
        for (int c = 0; c < B.random_cases; ++c) {
            const LiftScalar a = random_lift_scalar(p, M, rng);
            const LiftScalar b = random_lift_scalar(p, M, rng);
            const LiftScalar d = random_lift_scalar(p, M, rng);
            ++r.cases;
            if (!(a * (b + d) == a * b + a * d)) fail(r, "lift ring distributivity fails");
            if (!((a * b) * d == a * (b * d))) fail(r, "lift ring associativity fails");
            if (!(a.residue() * b.residue() == (a * b).residue()))
                fail(r, "residue map is not multiplicative");
            if (a.is_unit() && !(a * a.inverse() == one)) fail(r, "unit inversion fails");
        }
    }
}

void lift_weierstrass_roundtrip(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    for (int64 p : B.lift_primes) {
        const int64 M = B.lift_depth;
        const int n = B.lift_precision;
        const LiftScalar one = LiftScalar::one(p, M);
        const LiftScalar pi = LiftScalar::zeta_power(p, M, 1) - one;
        for (int c = 0; c < B.random_cases / 2 + 1; ++c) {
            // build f = (monic distinguished of degree d) * (random unit)
            const int64 d = draw(rng, 4);
            std::vector<LiftScalar> gc;
            for (int64 i = 0; i < d; ++i) gc.push_back(pi * random_lift_scalar(p, M, rng));
            gc.push_back(one);
            std::vector<LiftScalar> uc;
            LiftScalar u0 = random_lift_scalar(p, M, rng);
            while (!u0.is_unit()) u0 = u0 + one;
            uc.push_back(u0);
            for (int i = 1; i < n; ++i) uc.push_back(random_lift_scalar(p, M, rng));
            std::vector<LiftScalar> gpad(static_cast<std::size_t>(n), one.zero_like());
            for (std::size_t i = 0; i < gc.size(); ++i) gpad[i] = gc[i];
            const LiftSeries f = mul(LiftSeries(gpad), LiftSeries(uc));
            const DistinguishedFactorization fac = weierstrass_preparation(f);
            ++r.cases;
            if (fac.degree != d) fail(r, "preparation degree != valuation of the reduction");
            if (!(mul(fac.g_as_series(n), fac.u) == f)) fail(r, "factors do not remultiply");
            if (!fac.u.coeff(0).is_unit()) fail(r, "u is not a unit");
            for (int64 i = 0; i < fac.degree; ++i)
                if (!fac.g[static_cast<std::size_t>(i)].residue().is_zero())
                    fail(r, "non-leading coefficient of g is a unit");
        }
    }
}

void lift_homography_family(CheckResult& r, const Budget& B, std::mt19937_64&) {
    for (int64 p : B.lift_primes) {
        const int64 M = B.lift_depth;
        const int n = B.lift_precision;
        const std::vector<LiftScalar> cs = {
            LiftScalar::one(p, M),
            LiftScalar::from_int(p + 1, LiftScalar::one(p, M)),
            LiftScalar::zeta_power(p, M, 1),
        };
        for (const LiftScalar& c : cs) {
            const LiftSeries sigma = homography_lift(p, c, n);
            ++r.cases;
            if (!(compose_power(sigma, static_cast<uint64>(p)) == lift_identity(p, M, n)))
                fail(r, "homography lift does not have order p");
            const DiskAutomorphism reduced(reduce_series(sigma));
            if (break_number(reduced) != 1) fail(r, "reduction should have break 1");
            const DistinguishedFactorization fac = fixed_point_divisor(sigma);
            if (fac.degree != 2) fail(r, "fixed-point divisor should have degree 2");
        }
        // frozen p = 2 factor: g = T^2 + 2T with roots 0 and zeta - 1
        if (p == 2) {
            const LiftSeries sigma = homography_lift(2, LiftScalar::one(2, M), n);
            const DistinguishedFactorization fac = fixed_point_divisor(sigma);
            const LiftScalar zero = LiftScalar::zero(2, M);
            const LiftScalar root = LiftScalar::zeta_power(2, M, 1) - LiftScalar::one(2, M);
            ++r.cases;
            if (!(fac.g == std::vector<LiftScalar>{zero, LiftScalar::from_int(2, zero), zero.one_like()}))
                fail(r, "p=2 divisor polynomial is not T^2 + 2T");
            if (!fac.eval_g(zero).is_zero() || !fac.eval_g(root).is_zero())
                fail(r, "p=2 divisor roots are not {0, zeta - 1}");
        }
    }
}

void json_round_trip(CheckResult& r, const Budget& B, std::mt19937_64& rng) {
    const int64 primes[] = {2, 3, 5};
    for (int c = 0; c < B.random_cases; ++c) {
        const int64 p = primes[draw(rng, 3)];
        const int n = 2 + static_cast<int>(draw(rng, 10));
        const TruncatedSeries s = random_series(p, n, rng);
        ++r.cases;
        if (!(parse_series(to_json(s)) == s)) fail(r, "series JSON round trip fails");
        const LiftScalar a = random_lift_scalar(p, B.lift_depth, rng);
        if (!(parse_lift_scalar(to_json(a)) == a)) fail(r, "lift scalar JSON round trip fails");
    }
}

} // namespace

std::vector<std::vector<int64>> enumerate_jump_vectors(int n, int64 max_jump) {
    std::vector<std::vector<int64>> out;
    std::vector<int64> cur(static_cast<std::size_t>(n));
    const std::function<void(int, int64)> rec = [&](int k, int64 lo) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int64 j = lo; j <= max_jump; ++j) {
            cur[static_cast<std::size_t>(k)] = j;
            rec(k + 1, j + 1);
        }
    };
    rec(0, 1);
    return out;
}

SelfCheckReport run_selfcheck(const std::string& budget, uint64 seed) {
    const Budget B = budget_for(budget);
    std::mt19937_64 rng(seed);
    SelfCheckReport report;
    report.budget = budget;
    report.seed = seed;

    using Sweep = void (*)(CheckResult&, const Budget&, std::mt19937_64&);
    const std::pair<const char*, Sweep> sweeps[] = {
        {"series_ring_laws", series_ring_laws},
        {"series_unit_inverse", series_unit_inverse},
        {"series_compose_associative", series_compose_associative},
        {"series_valuation_law", series_valuation_law},
        {"series_nth_root_roundtrip", series_nth_root_roundtrip},
        {"series_reversion_roundtrip", series_reversion_roundtrip},
        {"auto_group_laws", auto_group_laws},
        {"auto_conjugation_break", auto_conjugation_break},
        {"auto_sigma_family", auto_sigma_family},
        {"auto_break_monotonicity", auto_break_monotonicity},
        {"auto_search_hasse_arf", auto_search_hasse_arf},
        {"profile_equivalence", profile_equivalence},
        {"profile_artin_different", profile_artin_different},
        {"oort_round_trip", oort_round_trip},
        {"oort_identity_and_genus", oort_identity_and_genus},
        {"oort_oracle_agreement", oort_oracle_agreement},
        {"lift_scalar_laws", lift_scalar_laws},
        {"lift_weierstrass_roundtrip", lift_weierstrass_roundtrip},
        {"lift_homography_family", lift_homography_family},
        {"json_round_trip", json_round_trip},
    };
    for (const auto& [name, sweep] : sweeps) {
        CheckResult result;
        result.name = name;
        try {
            sweep(result, B, rng);
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = e.what();
        }
        if (!result.pass) report.pass = false;
        report.checks.push_back(std::move(result));
    }
    return report;
}

nlohmann::json to_json(const SelfCheckReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json entry{{"name", c.name},
                             {"status", c.pass ? "PASS" : "FAIL"},
                             {"cases", c.cases}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    return nlohmann::json{
        {"budget", r.budget}, {"seed", r.seed}, {"checks", checks}, {"pass", r.pass}};
}

} // namespace ramify
