#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramify/oort.hpp"
#include "ramify/ramification.hpp"
#include "ramify/selfcheck.hpp"

using namespace ramify;

namespace {

FiltrationReport report(int64 p, std::vector<int64> jumps) {
    const int64 precision = jumps.back() + 2;
    return FiltrationReport::from_jumps(p, std::move(jumps), precision);
}

} // namespace

TEST_CASE("artin table") {
    // p = 2, n = 1, jumps [1]: ar(sigma) = -2, ar(1) = 2
    const ArtinTable a1 = artin_table(report(2, {1}));
    CHECK(a1.classes().size() == 1);
    CHECK(a1.classes()[0].value == -2);
    CHECK(a1.classes()[0].size == 1);
    CHECK(a1.at_identity() == 2);

    // p = 2, n = 2, jumps [1,3]: |G_i| table 4,4,2,2 gives ar(1) = 8
    const ArtinTable a2 = artin_table(report(2, {1, 3}));
    CHECK(a2.at_identity() == 8);
    CHECK(a2.classes()[0].value == -2);
    CHECK(a2.classes()[0].size == 2);
    CHECK(a2.classes()[1].value == -4);
    CHECK(a2.classes()[1].size == 1);

    // class-weighted trace vanishes
    for (const auto& jumps : {std::vector<int64>{2}, {1, 3}, {2, 11, 38}}) {
        const ArtinTable at = artin_table(report(3, jumps));
        int64 trace = at.at_identity();
        for (const ArtinClass& c : at.classes()) trace += c.size * c.value;
        CHECK(trace == 0);
    }
}

TEST_CASE("different valuation") {
    CHECK(different_valuation(report(2, {1})) == 2);
    CHECK(different_valuation(report(2, {1, 3})) == 8);
    CHECK(different_valuation(FiltrationReport::from_jumps(5, {}, 4)) == 0);
}

TEST_CASE("herbrand upper jumps") {
    CHECK(herbrand_upper_jumps(JumpProfile(2, {1, 3})) ==
          std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(herbrand_upper_jumps(JumpProfile(2, {1, 2})) ==
          std::vector<Rational>{Rational(1), Rational(3, 2)});
    CHECK(herbrand_upper_jumps(JumpProfile(7, {4})) == std::vector<Rational>{Rational(4)});
}

TEST_CASE("hasse_arf_holds") {
    const HasseArfVerdict pass = hasse_arf_holds(JumpProfile(2, {1, 3}));
    CHECK(pass.pass);
    CHECK(pass.coefficients == std::vector<int64>{1, 1});   // j_1 = 1 + 1*2
    CHECK(!pass.violation_index);

    const HasseArfVerdict fail = hasse_arf_holds(JumpProfile(2, {1, 2}));
    CHECK(!fail.pass);
    CHECK(fail.violation_index == 1);
    CHECK(fail.coefficients == std::vector<int64>{1});

    // jumps 2, 2+9, 2+9+27: level k grows by i_k p^k with i_1 = 9/3 = 3,
    // i_2 = 27/9 = 3
    const HasseArfVerdict deep = hasse_arf_holds(JumpProfile(3, {2, 11, 38}));
    CHECK(deep.pass);
    CHECK(deep.coefficients == std::vector<int64>{2, 3, 3});
}

TEST_CASE("equivalence of the three formulations") {
    // PASS <=> upper jumps integral <=> orbit translation succeeds,
    // exhaustively for n <= 3, j <= 40, p in {2, 3}
    for (int64 p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& jumps : enumerate_jump_vectors(n, 40)) {
                const JumpProfile jp(p, jumps);
                const HasseArfVerdict v = hasse_arf_holds(jp);
                bool integral = true;
                for (const Rational& u : herbrand_upper_jumps(jp))
                    if (!u.is_integer()) integral = false;
                bool translates = true;
                int index = -1;
                try {
                    (void)jumps_to_orbits(jp);
                } catch (const HasseArfViolation& e) {
                    translates = false;
                    index = e.index;
                }
                REQUIRE(v.pass == integral);
                REQUIRE(v.pass == translates);
                if (!v.pass) REQUIRE(index == *v.violation_index);
            }
        }
    }
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(JumpProfile(2, {}), InvalidParameter);
    CHECK_THROWS_AS(JumpProfile(2, {0}), InvalidParameter);
    CHECK_THROWS_AS(JumpProfile(2, {3, 1}), InvalidParameter);
    CHECK_THROWS_AS(JumpProfile(4, {1}), InvalidParameter);
    CHECK_THROWS_AS(FiltrationReport::from_jumps(2, {1, 3}, 4), InvalidParameter);
    CHECK(report(2, {1, 3}).leading_jump_prime_to_p());
    CHECK(!report(3, {3}).leading_jump_prime_to_p());
}
