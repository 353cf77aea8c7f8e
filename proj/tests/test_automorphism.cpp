#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ramify/automorphism.hpp"
#include "ramify/ramification.hpp"

using namespace ramify;

namespace {

// independent oracle: k-fold composition by a plain loop
DiskAutomorphism slow_power(const DiskAutomorphism& a, int k) {
    DiskAutomorphism acc = DiskAutomorphism::identity(a.p(), a.precision());
    for (int i = 0; i < k; ++i) acc = compose_auto(acc, a);
    return acc;
}

DiskAutomorphism sigma1(int64 p, int n) {
    // t/(1+t)
    return DiskAutomorphism(shift_up(unit_inverse(make_series(p, n, {1, 1}))));
}

} // namespace

TEST_CASE("construction") {
    CHECK_THROWS_AS(DiskAutomorphism(make_series(3, 6, {1, 1})), InvalidParameter);
    CHECK_THROWS_AS(DiskAutomorphism(make_series(3, 6, {0, 0, 1})), InvalidParameter);
    CHECK(DiskAutomorphism(make_series(3, 6, {0, 2, 1})).wild() == false);
    CHECK(sigma1(3, 6).wild());
    CHECK(DiskAutomorphism::identity(5, 8).is_identity());
}

TEST_CASE("compose_auto and power") {
    const DiskAutomorphism id2 = DiskAutomorphism::identity(2, 8);
    const DiskAutomorphism s = sigma1(2, 8);
    CHECK(compose_auto(s, id2) == s);
    // t/(1+t) has order 2: the closed form composes to t/(1+2t) = t
    CHECK(compose_auto(s, s) == id2);

    CHECK(power(s, 0) == id2);
    CHECK(power(s, 1) == s);
    for (int64 p : {2, 3, 5}) {
        const DiskAutomorphism sp = sigma1(p, 12);
        CHECK(power(sp, static_cast<uint64>(p)).is_identity());
    }

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const DiskAutomorphism a = random_wild(3, 10, rng);
        CHECK(compose_auto(a, inverse_auto(a)).is_identity());
        const int k = static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
        CHECK(power(a, static_cast<uint64>(k + l)) ==
              compose_auto(power(a, static_cast<uint64>(k)), power(a, static_cast<uint64>(l))));
        CHECK(power(a, static_cast<uint64>(k)) == slow_power(a, k));
    }
}

TEST_CASE("order_mod_precision") {
    CHECK(order_mod_precision(DiskAutomorphism::identity(3, 8), 2) == 0);
    CHECK(order_mod_precision(sigma1(3, 16), 2) == 1);

    // t + t^2 over F_2 squares to t + t^4, so it is not 2-torsion at N=16
    const DiskAutomorphism a(make_series(2, 16, {0, 1, 1}));
    const DiskAutomorphism sq = compose_auto(a, a);
    CHECK(sq == DiskAutomorphism(make_series(2, 16, {0, 1, 0, 0, 1})));
    CHECK_THROWS_AS(order_mod_precision(a, 1), NotAPnTorsionElement);

    CHECK_THROWS_AS(order_mod_precision(DiskAutomorphism(make_series(3, 8, {0, 2})), 1), NotWild);
}

TEST_CASE("break_number") {
    CHECK(break_number(sigma1(2, 8)) == 1);
    CHECK(break_number(sigma_m_example(5, 3)) == 3);
    CHECK_THROWS_AS(break_number(DiskAutomorphism::identity(2, 8)),
                    IndistinguishableFromIdentity);
}

TEST_CASE("cyclic_filtration") {
    const FiltrationReport fr = cyclic_filtration(sigma1(2, 8), 1);
    CHECK(fr.jumps() == std::vector<int64>{1});
    CHECK(fr.group_order(0) == 2);
    CHECK(fr.group_order(1) == 2);
    CHECK(fr.group_order(2) == 1);
    CHECK(fr.group_order_table() ==
          std::vector<std::pair<int64, int64>>{{0, 2}, {1, 2}, {2, 1}});
    CHECK(fr.precision_used() == 8);

    CHECK(cyclic_filtration(sigma_m_example(3, 2), 1).jumps() == std::vector<int64>{2});

    // order-p elements have no exponent-2 filtration at any precision
    CHECK_THROWS_AS(cyclic_filtration(sigma1(2, 16), 2), InsufficientPrecision);
    // and an element of larger order fails the other way
    CHECK_THROWS_AS(cyclic_filtration(DiskAutomorphism(make_series(2, 16, {0, 1, 1})), 1),
                    WrongOrder);
}

TEST_CASE("sigma_m family") {
    for (int64 p : {2, 3, 5, 7}) {
        for (int64 m = 1; m <= 10; ++m) {
            if (std::gcd(m, p) != 1) continue;
            const int precision = static_cast<int>(m * p + 4);
            const DiskAutomorphism sigma = sigma_m_example(p, m, precision);
            CHECK(order_mod_precision(sigma, 1) == 1);
            CHECK(break_number(sigma) == m);
            // iterates against the closed form t (1 + k t^m)^{-1/m}
            for (int64 k = 1; k < p; ++k)
                CHECK(slow_power(sigma, static_cast<int>(k)) ==
                      sigma_m_iterate(p, m, k, precision));
        }
    }
    // p = 2, m = 1 explicitly: every coefficient of t/(1+t) is 1
    CHECK(sigma_m_example(2, 1, 6).series() == make_series(2, 6, {0, 1, 1, 1, 1, 1}));

    CHECK_THROWS_AS(sigma_m_example(3, 3), RootObstruction);
    CHECK_THROWS_AS(sigma_m_example(3, 2, 5), InsufficientPrecision);
}

TEST_CASE("conjugation invariance of the break") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        const int64 p = (i % 2) ? 3 : 2;
        DiskAutomorphism a = random_wild(p, 14, rng);
        if (a.is_identity()) a = sigma_m_example(p, 1, 14);
        const DiskAutomorphism tau = random_wild(p, 14, rng);
        const DiskAutomorphism conj = compose_auto(compose_auto(tau, a), inverse_auto(tau));
        CHECK(break_number(conj) == break_number(a));
    }
}

TEST_CASE("torsion search") {
    const auto fixtures = search_wild_torsion(2, 32, 2, 5, 99);
    CHECK(fixtures.size() == 5);
    std::set<std::vector<Fp>> distinct;
    for (const DiskAutomorphism& a : fixtures) {
        distinct.insert(a.series().coeffs());
        CHECK(order_mod_precision(a, 2) == 2);
        // breaks strictly increase under p-th powers
        CHECK(break_number(power(a, 2)) > break_number(a));
    }
    CHECK(distinct.size() == 5);

    // deterministic for a fixed seed
    const auto again = search_wild_torsion(2, 32, 2, 5, 99);
    CHECK(fixtures == again);
    const auto other = search_wild_torsion(2, 32, 2, 5, 100);
    CHECK(fixtures != other);
}

TEST_CASE("searched elements satisfy the jump congruence") {
    for (uint64 seed : {7ULL, 8ULL}) {
        for (const DiskAutomorphism& a : search_wild_torsion(2, 48, 2, 3, seed)) {
            const FiltrationReport fr = cyclic_filtration(a, 2);
            CHECK(hasse_arf_holds(fr.jump_profile()).pass);
            CHECK((fr.jumps()[1] - fr.jumps()[0]) % 2 == 0);
        }
    }
}
