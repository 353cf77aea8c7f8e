#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramify/oort.hpp"
#include "ramify/selfcheck.hpp"

using namespace ramify;

namespace {

FiltrationReport report(int64 p, std::vector<int64> jumps) {
    const int64 precision = jumps.back() + 2;
    return FiltrationReport::from_jumps(p, std::move(jumps), precision);
}

} // namespace

TEST_CASE("jumps_to_orbits") {
    const OrbitProfile op = jumps_to_orbits(JumpProfile(2, {1, 3}));
    CHECK(op.counts() == std::vector<int64>{2, 2});
    CHECK(op.orbit_count(1) == 1);   // one orbit of size 2 at level 1

    CHECK_THROWS_AS((void)jumps_to_orbits(JumpProfile(2, {1, 2})), HasseArfViolation);
    try {
        (void)jumps_to_orbits(JumpProfile(2, {1, 2}));
    } catch (const HasseArfViolation& e) {
        CHECK(e.index == 1);
    }

    const OrbitProfile op3 = jumps_to_orbits(JumpProfile(3, {2, 11}));
    CHECK(op3.counts() == std::vector<int64>{3, 9});
    CHECK(op3.orbit_count(0) == 2);   // the level-0 count reported paper-style: s_0 - 1
    CHECK(op3.orbit_count(1) == 3);   // three orbits of size 3
}

TEST_CASE("orbits_to_jumps") {
    CHECK(orbits_to_jumps(OrbitProfile(2, {2, 2})) == JumpProfile(2, {1, 3}));
    CHECK(orbits_to_jumps(OrbitProfile(5, {8})) == JumpProfile(5, {7}));   // s = [m+1] -> j = [m]
    CHECK(orbits_to_jumps(OrbitProfile(3, {3, 9, 27})) == JumpProfile(3, {2, 11, 38}));
}

TEST_CASE("orbit profile validation") {
    CHECK_THROWS_AS(OrbitProfile(2, {1}), InvalidParameter);      // s_0 >= 2
    CHECK_THROWS_AS(OrbitProfile(2, {2, 0}), InvalidParameter);   // empty level
    CHECK_THROWS_AS(OrbitProfile(2, {2, 3}), HasseArfViolation);  // p does not divide s_1
    CHECK_THROWS_AS(OrbitProfile(2, {3, 2}, true), StrictModeViolation);  // j_0 = 2 even
    CHECK(OrbitProfile(2, {3, 2}).counts() == std::vector<int64>{3, 2});  // fine without strict
}

TEST_CASE("fixed_point_count") {
    const OrbitProfile op(2, {2, 2});
    CHECK(fixed_point_count(op, 0) == 2);
    CHECK(fixed_point_count(op, 1) == 4);
    CHECK(fixed_point_count(OrbitProfile(5, {6}), 0) == 6);
    CHECK(fixed_point_count(OrbitProfile(3, {3, 9}), 1) == 12);
    CHECK_THROWS_AS(fixed_point_count(op, 2), InvalidParameter);
}

TEST_CASE("verify_artin_identity") {
    // worked case p = 2, jumps [1,3], s = [2,2]
    const ArtinIdentityReport r = verify_artin_identity(report(2, {1, 3}), OrbitProfile(2, {2, 2}));
    CHECK(r.pass);
    CHECK(r.rows[0].special == -2);
    CHECK(r.rows[0].generic == -2);
    CHECK(r.rows[1].special == -4);
    CHECK(r.rows[1].generic == -4);
    CHECK(r.different.special == 8);
    CHECK(r.different.generic == 2 * 3 + 2 * 1);
    CHECK(r.different.balanced);

    const ArtinIdentityReport r1 = verify_artin_identity(report(2, {1}), OrbitProfile(2, {2}));
    CHECK(r1.pass);
    CHECK(r1.different.special == 2);

    // constructed mismatch: s = [2,4] against jumps [1,3] fails at k = 1
    const ArtinIdentityReport bad = verify_artin_identity(report(2, {1, 3}), OrbitProfile(2, {2, 4}));
    CHECK(!bad.pass);
    CHECK(bad.rows[0].pass);
    CHECK(!bad.rows[1].pass);

    CHECK_THROWS_AS(verify_artin_identity(report(2, {1}), OrbitProfile(3, {3})),
                    MismatchedProfiles);
}

TEST_CASE("genus_check") {
    const GenusCheck g1 = genus_check(report(2, {1, 3}), OrbitProfile(2, {2, 2}));
    CHECK(g1.genus == 1);
    CHECK(g1.balanced);
    CHECK(g1.euler_special == 0);

    const GenusCheck g0 = genus_check(report(2, {1}), OrbitProfile(2, {2}));
    CHECK(g0.genus == 0);
    CHECK(g0.balanced);

    // p = 3, j = [2]: different = 6, so 2g - 2 = -6 + 6 = 0
    const GenusCheck g3 = genus_check(report(3, {2}), OrbitProfile(3, {3}));
    CHECK(g3.genus == 1);
    CHECK(g3.balanced);

    // even leading jump at p = 2 is not realizable: half-integral genus
    CHECK_THROWS_AS(genus_check(report(2, {2}), OrbitProfile(2, {3})), NonIntegralGenus);

    // mismatched pair: valid genus but unbalanced
    const GenusCheck bad = genus_check(report(2, {1, 5}), OrbitProfile(2, {2, 2}));
    CHECK(!bad.balanced);
}

TEST_CASE("round trip over the exhaustive range") {
    for (int64 p : {2, 3, 5}) {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& jumps : enumerate_jump_vectors(n, 60)) {
                const JumpProfile jp(p, jumps);
                if (!hasse_arf_holds(jp).pass) continue;
                const OrbitProfile op = jumps_to_orbits(jp);
                REQUIRE(orbits_to_jumps(op) == jp);
                // Artin identity and balance hold by construction; guard drift
                const FiltrationReport fr = report(p, jumps);
                REQUIRE(verify_artin_identity(fr, op).pass);
            }
        }
    }
}

TEST_CASE("oracle enumeration") {
    // n = 1: within 5 points the realizable wild counts are s_0 in {2,..,5}
    const auto small = brute_force_orbit_oracle(2, 1, 5);
    CHECK(small.size() == 4);
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(small[i].counts == std::vector<int64>{static_cast<int64>(i + 2)});
        CHECK(small[i].jumps == std::vector<int64>{static_cast<int64>(i + 1)});
    }

    // n = 2: every enumerated G-set has an even level-1 count
    for (const OracleEntry& e : brute_force_orbit_oracle(2, 2, 30))
        CHECK(e.counts[1] % 2 == 0);

    CHECK(brute_force_orbit_oracle(2, 1, 1).empty());   // s_0 >= 2 unreachable
    CHECK_THROWS_AS(brute_force_orbit_oracle(2, 6, 40), BudgetExceeded);   // 2^6 = 64 > 27
    CHECK_THROWS_AS(brute_force_orbit_oracle(2, 2, 61), BudgetExceeded);
}

TEST_CASE("oracle agrees with the translators") {
    const int64 max_points = 40;
    const auto oracle = brute_force_orbit_oracle(2, 2, max_points);
    std::set<std::vector<int64>> oracle_jumps;
    for (const OracleEntry& e : oracle) {
        oracle_jumps.insert(e.jumps);
        const JumpProfile jp(2, e.jumps);
        REQUIRE(hasse_arf_holds(jp).pass);
        REQUIRE(jumps_to_orbits(jp).counts() == e.counts);
        REQUIRE(e.fixed_point_counts[1] == e.counts[0] + e.counts[1]);
    }
    // no omissions: every accepted profile within the budget is realized
    int accepted = 0;
    for (const auto& jumps : enumerate_jump_vectors(2, max_points - 1)) {
        const JumpProfile jp(2, jumps);
        if (!hasse_arf_holds(jp).pass) continue;
        if (jumps.back() + 1 > max_points) continue;
        ++accepted;
        REQUIRE(oracle_jumps.count(jumps) == 1);
    }
    CHECK(accepted == static_cast<int>(oracle.size()));
}
