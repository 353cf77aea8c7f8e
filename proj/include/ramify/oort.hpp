#pragma once

#include <vector>

#include "filtration.hpp"
#include "ramification.hpp"

namespace ramify {

// Branch points of the generic fibre of an equivariant lift, stratified by
// stabilizer: s_k points have stabilizer of exact order p^{n-k}, and the
// level-k points fall into orbits of size p^k, so p^k | s_k.  Level 0 holds
// the fully fixed points; a nontrivial wild action has at least two of them
// (s_0 = j_0 + 1 >= 2).
//
// Orbit counts come in two normalizations: at level k >= 1 the count is
// s_k / p^k; at level 0 this class exposes both s_0 and s_0 - 1, reporting
// the latter as the orbit count so that
//   j_k = i_0 + i_1 p + ... + i_k p^k
// holds literally with these i's.
class OrbitProfile {
public:
    OrbitProfile(int64 p, std::vector<int64> counts, bool strict = false);

    int64 p() const { return p_; }
    int n() const { return static_cast<int>(s_.size()); }
    const std::vector<int64>& counts() const { return s_; }
    int64 s(int k) const;
    bool strict() const { return strict_; }

    int64 orbit_count(int k) const;          // i_0 = s_0 - 1; i_k = s_k / p^k
    std::vector<int64> orbit_counts() const;
    int64 total_points() const;

    friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;

private:
    int64 p_;
    std::vector<int64> s_;
    bool strict_;
};

// s_0 = j_0 + 1 and s_k = j_k - j_{k-1}; fails with HasseArfViolation(k)
// exactly when p^k does not divide j_k - j_{k-1} -- the divisibility IS the
// constraint that level k is a union of orbits of size p^k.
OrbitProfile jumps_to_orbits(const JumpProfile& jp, bool strict = false);

// j_0 = s_0 - 1, j_k = j_{k-1} + s_k; exact inverse of jumps_to_orbits.
JumpProfile orbits_to_jumps(const OrbitProfile& op);

// Number of generic branch points fixed by an element of exact break j_k:
// the levels 0..k, so sum_{l <= k} s_l.
int64 fixed_point_count(const OrbitProfile& op, int k);

// Valuation of the different on both fibres: special from the filtration,
// generic from tame stabilizers (each level-l point contributes p^{n-l} - 1).
struct DifferentBalance {
    int64 special;
    int64 generic;
    bool balanced;
};
DifferentBalance different_balance(const FiltrationReport& fr, const OrbitProfile& op);

// Per-class comparison of the Artin values computed on the two fibres:
// -(j_k + 1) against -(number of generic fixed points), plus the sigma = 1
// row, which is the different balance.
struct ArtinIdentityRow {
    int k;
    int64 special;
    int64 generic;
    bool pass;
};
struct ArtinIdentityReport {
    std::vector<ArtinIdentityRow> rows;
    DifferentBalance different;
    bool pass;
};
ArtinIdentityReport verify_artin_identity(const FiltrationReport& fr, const OrbitProfile& op);

// Riemann-Hurwitz over a genus-0 quotient on both fibres:
// 2g - 2 = -2 p^n + different.  Balanced when both fibres give the same
// Euler characteristic; NonIntegralGenus signals an unrealizable profile.
struct GenusCheck {
    int64 genus;
    bool balanced;
    int64 euler_special;   // 2g - 2 on the special fibre
    int64 euler_generic;
};
GenusCheck genus_check(const FiltrationReport& fr, const OrbitProfile& op);

// Exhaustive enumeration of finite Z/p^n-sets (no free orbits) within a point
// budget; fixed-point ladders are turned into candidate jumps directly, with
// no reference to jumps_to_orbits.  The independent oracle for the
// jumps <-> orbits translation.
struct OracleEntry {
    std::vector<int64> counts;               // s_0 .. s_{n-1}
    std::vector<int64> fixed_point_counts;   // partial sums
    std::vector<int64> jumps;                // ladder values minus one
};
std::vector<OracleEntry> brute_force_orbit_oracle(int64 p, int n, int64 max_points);

} // namespace ramify
