#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"

namespace ramify {

// Jump data of a ramification filtration, detached from any automorphism:
// a prime p and strictly increasing positive integers j_0 < ... < j_{n-1}.
class JumpProfile {
public:
    JumpProfile(int64 p, std::vector<int64> jumps);

    int64 p() const { return p_; }
    int n() const { return static_cast<int>(jumps_.size()); }
    const std::vector<int64>& jumps() const { return jumps_; }
    int64 jump(int k) const;

    friend bool operator==(const JumpProfile&, const JumpProfile&) = default;

private:
    int64 p_;
    std::vector<int64> jumps_;
};

// Ramification filtration of a cyclic group of order p^n acting on the disk:
// the jumps plus the derived subgroup-order table
//
//   |G_i| = p^n        for 0 <= i <= j_0,
//   |G_i| = p^{n-k}    for j_{k-1} < i <= j_k,
//   |G_i| = 1          for i > j_{n-1}.
//
// Every order statement is modulo t^N; the precision used is recorded so the
// one source of unsoundness stays visible.
class FiltrationReport {
public:
    static FiltrationReport from_jumps(int64 p, std::vector<int64> jumps, int64 precision_used);

    int64 p() const { return p_; }
    int n() const { return static_cast<int>(jumps_.size()); }
    const std::vector<int64>& jumps() const { return jumps_; }
    int64 precision_used() const { return precision_used_; }

    int64 group_order(int64 i) const;
    // pairs (i, |G_i|) for 0 <= i <= j_{n-1} + 1 (just {(0, 1)} for n = 0)
    std::vector<std::pair<int64, int64>> group_order_table() const;

    JumpProfile jump_profile() const;

    // classical fact for genuine finite-order automorphisms; synthetic data
    // may violate it, so it is reported rather than enforced
    bool leading_jump_prime_to_p() const;

    friend bool operator==(const FiltrationReport&, const FiltrationReport&) = default;

private:
    FiltrationReport(int64 p, std::vector<int64> jumps, int64 precision_used)
        : p_(p), jumps_(std::move(jumps)), precision_used_(precision_used) {}
    int64 p_;
    std::vector<int64> jumps_;
    int64 precision_used_;
};

} // namespace ramify
