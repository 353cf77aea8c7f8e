#include "ramify/oort.hpp"

#include <algorithm>
#include <string>

namespace ramify {

OrbitProfile::OrbitProfile(int64 p, std::vector<int64> counts, bool strict)
    : p_(p), s_(std::move(counts)), strict_(strict) {
    require_prime(p_);
    if (s_.empty()) throw InvalidParameter("an orbit profile needs at least one level");
    if (s_[0] < 2)
        throw InvalidParameter("a nontrivial wild action fixes at least two points: s_0 >= 2");
    for (int k = 1; k < n(); ++k) {
        const int64 sk = s_[static_cast<std::size_t>(k)];
        if (sk < 1)
            throw InvalidParameter("every level below the exponent must be populated");
        if (sk % ipow_checked(p_, k) != 0)
            throw HasseArfViolation(k, "level " + std::to_string(k) + " has " + std::to_string(sk) +
                                           " points, not a multiple of p^" + std::to_string(k));
    }
    if (strict_ && (s_[0] - 1) % p_ == 0)
        throw StrictModeViolation("strict mode requires gcd(j_0, p) = 1, got j_0 = " +
                                  std::to_string(s_[0] - 1));
}

int64 OrbitProfile::s(int k) const {
    if (k < 0 || k >= n()) throw InvalidParameter("level index out of range");
    return s_[static_cast<std::size_t>(k)];
}

int64 OrbitProfile::orbit_count(int k) const {
    if (k == 0) return s(0) - 1;
    return s(k) / ipow_checked(p_, k);
}

std::vector<int64> OrbitProfile::orbit_counts() const {
    std::vector<int64> out;
    out.reserve(s_.size());
    for (int k = 0; k < n(); ++k) out.push_back(orbit_count(k));
    return out;
}

int64 OrbitProfile::total_points() const {
    int64 total = 0;
    for (int64 sk : s_) total += sk;
    return total;
}

OrbitProfile jumps_to_orbits(const JumpProfile& jp, bool strict) {
    std::vector<int64> counts;
    counts.reserve(static_cast<std::size_t>(jp.n()));
    counts.push_back(jp.jump(0) + 1);
    for (int k = 1; k < jp.n(); ++k) counts.push_back(jp.jump(k) - jp.jump(k - 1));
    return OrbitProfile(jp.p(), std::move(counts), strict);
}

JumpProfile orbits_to_jumps(const OrbitProfile& op) {
    std::vector<int64> jumps;
    jumps.reserve(static_cast<std::size_t>(op.n()));
    int64 j = op.s(0) - 1;
    jumps.push_back(j);
    for (int k = 1; k < op.n(); ++k) {
        j += op.s(k);
        jumps.push_back(j);
    }
    return JumpProfile(op.p(), std::move(jumps));
}

int64 fixed_point_count(const OrbitProfile& op, int k) {
    if (k < 0 || k >= op.n()) throw InvalidParameter("break index out of range");
    int64 total = 0;
    for (int l = 0; l <= k; ++l) total += op.s(l);
    return total;
}

namespace {

void require_matching(const FiltrationReport& fr, const OrbitProfile& op) {
    if (fr.p() != op.p())
        throw MismatchedProfiles("filtration and orbit profile live over different primes");
    if (fr.n() != op.n())
        throw MismatchedProfiles("filtration and orbit profile have different exponents");
}

int64 generic_different(const OrbitProfile& op) {
    // each level-l point is tamely ramified with stabilizer order p^{n-l}
    int64 total = 0;
    for (int l = 0; l < op.n(); ++l)
        total += op.s(l) * (ipow_checked(op.p(), op.n() - l) - 1);
    return total;
}

} // namespace

DifferentBalance different_balance(const FiltrationReport& fr, const OrbitProfile& op) {
    require_matching(fr, op);
    const int64 special = different_valuation(fr);
    const int64 generic = generic_different(op);
    return DifferentBalance{special, generic, special == generic};
}

ArtinIdentityReport verify_artin_identity(const FiltrationReport& fr, const OrbitProfile& op) {
    require_matching(fr, op);
    ArtinIdentityReport report;
    report.pass = true;
    for (int k = 0; k < fr.n(); ++k) {
        const int64 special = -(fr.jumps()[static_cast<std::size_t>(k)] + 1);
        const int64 generic = -fixed_point_count(op, k);
        const bool ok = special == generic;
        report.rows.push_back(ArtinIdentityRow{k, special, generic, ok});
        if (!ok) report.pass = false;
    }
    report.different = different_balance(fr, op);
    if (!report.different.balanced) report.pass = false;
    return report;
}

GenusCheck genus_check(const FiltrationReport& fr, const OrbitProfile& op) {
    require_matching(fr, op);
    const int64 two_pn = 2 * ipow_checked(fr.p(), fr.n());
    const int64 euler_special = -two_pn + different_valuation(fr);
    const int64 euler_generic = -two_pn + generic_different(op);
    if (euler_special % 2 != 0)
        throw NonIntegralGenus("2g - 2 = " + std::to_string(euler_special) +
                               " is odd; the profile is not realizable by a smooth family");
    const int64 genus = (euler_special + 2) / 2;
    if (genus < 0)
        throw NonIntegralGenus("negative genus from Euler characteristic " +
                               std::to_string(euler_special));
    return GenusCheck{genus, euler_special == euler_generic, euler_special, euler_generic};
}

std::vector<OracleEntry> brute_force_orbit_oracle(int64 p, int n, int64 max_points) {
    require_prime(p);
    if (n < 1) throw InvalidParameter("exponent must be >= 1");
    if (max_points < 0) throw InvalidParameter("point budget must be nonnegative");
    if (ipow_checked(p, n) > 27 || max_points > 60)
        throw BudgetExceeded("enumeration caps: p^n <= 27 and max_points <= 60");

    // A Z/p^n-set with every stabilizer nontrivial is a multiset of orbits of
    // sizes p^0 .. p^{n-1}; a_k orbits of size p^k put s_k = a_k p^k points at
    // level k.  Walk all multiplicity vectors within the budget.
    std::vector<OracleEntry> out;
    std::vector<int64> a(static_cast<std::size_t>(n), 0);
    const auto emit = [&]() {
        std::vector<int64> s, ladder, jumps;
        int64 acc = 0;
        for (int k = 0; k < n; ++k) {
            s.push_back(a[static_cast<std::size_t>(k)] * ipow_checked(p, k));
            acc += s.back();
            ladder.push_back(acc);
            jumps.push_back(acc - 1);
        }
        // keep the G-sets whose ladder is a genuine jump sequence
        if (jumps[0] < 1) return;
        for (int k = 1; k < n; ++k)
            if (jumps[static_cast<std::size_t>(k)] <= jumps[static_cast<std::size_t>(k - 1)]) return;
        out.push_back(OracleEntry{std::move(s), std::move(ladder), std::move(jumps)});
    };
    const auto recurse = [&](auto&& self, int level, int64 budget) -> void {
        if (level == n) {
            emit();
            return;
        }
        const int64 orbit_size = ipow_checked(p, level);
        for (int64 count = 0; count * orbit_size <= budget; ++count) {
            a[static_cast<std::size_t>(level)] = count;
            self(self, level + 1, budget - count * orbit_size);
        }
        a[static_cast<std::size_t>(level)] = 0;
    };
    recurse(recurse, 0, max_points);
    std::sort(out.begin(), out.end(),
              [](const OracleEntry& x, const OracleEntry& y) { return x.jumps < y.jumps; });
    return out;
}

} // namespace ramify
