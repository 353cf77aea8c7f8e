#include "ramify/filtration.hpp"

#include <string>

namespace ramify {

namespace {

void validate_jumps(int64 p, const std::vector<int64>& jumps) {
    require_prime(p);
    for (std::size_t k = 0; k < jumps.size(); ++k) {
        if (jumps[k] < 1)
            throw InvalidParameter("jumps must be positive integers");
        if (k > 0 && jumps[k] <= jumps[k - 1])
            throw InvalidParameter("jumps must be strictly increasing");
    }
}

} // namespace

JumpProfile::JumpProfile(int64 p, std::vector<int64> jumps) : p_(p), jumps_(std::move(jumps)) {
    validate_jumps(p_, jumps_);
    if (jumps_.empty()) throw InvalidParameter("a jump profile needs at least one jump");
}

int64 JumpProfile::jump(int k) const {
    if (k < 0 || k >= n()) throw InvalidParameter("jump index out of range");
    return jumps_[static_cast<std::size_t>(k)];
}

FiltrationReport FiltrationReport::from_jumps(int64 p, std::vector<int64> jumps, int64 precision_used) {
    validate_jumps(p, jumps);
    if (precision_used < 1) throw InvalidParameter("precision_used must be positive");
    if (!jumps.empty() && jumps.back() >= precision_used - 1)
        throw InvalidParameter("every jump must satisfy j < precision - 1");
    ipow_checked(p, static_cast<int64>(jumps.size())); // order p^n must fit
    return FiltrationReport(p, std::move(jumps), precision_used);
}

int64 FiltrationReport::group_order(int64 i) const {
    if (i < 0) throw InvalidParameter("filtration index must be nonnegative");
    int k = 0;
    while (k < n() && jumps_[static_cast<std::size_t>(k)] < i) ++k;
    return ipow_checked(p_, static_cast<int64>(n() - k));
}

std::vector<std::pair<int64, int64>> FiltrationReport::group_order_table() const {
    std::vector<std::pair<int64, int64>> table;
    const int64 top = jumps_.empty() ? 0 : jumps_.back() + 1;
    for (int64 i = 0; i <= top; ++i) table.emplace_back(i, group_order(i));
    return table;
}

JumpProfile FiltrationReport::jump_profile() const {
    if (jumps_.empty())
        throw InvalidParameter("the trivial filtration has no jump profile");
    return JumpProfile(p_, jumps_);
}

bool FiltrationReport::leading_jump_prime_to_p() const {
    if (jumps_.empty()) return true;
    return jumps_.front() % p_ != 0;
}

} // namespace ramify
