#include "ramify/ramification.hpp"

namespace ramify {

ArtinTable artin_table(const FiltrationReport& fr) {
    const int64 p = fr.p();
    const int n = fr.n();
    std::vector<ArtinClass> classes;
    classes.reserve(static_cast<std::size_t>(n));
    int64 at_identity = 0;
    for (int k = 0; k < n; ++k) {
        const int64 jk = fr.jumps()[static_cast<std::size_t>(k)];
        const int64 size = ipow_checked(p, n - k) - ipow_checked(p, n - k - 1);
        classes.push_back(ArtinClass{k, jk, size, -(jk + 1)});
        at_identity += size * (jk + 1);
    }
    return ArtinTable(p, n, std::move(classes), at_identity);
}

int64 different_valuation(const FiltrationReport& fr) {
    if (fr.n() == 0) return 0;
    int64 total = 0;
    for (int64 i = 0; i <= fr.jumps().back(); ++i) total += fr.group_order(i) - 1;
    return total;
}

std::vector<Rational> herbrand_upper_jumps(const JumpProfile& jp) {
    std::vector<Rational> u;
    u.reserve(static_cast<std::size_t>(jp.n()));
    Rational acc(0);
    for (int k = 0; k < jp.n(); ++k) {
        const int64 step = k == 0 ? jp.jump(0) : jp.jump(k) - jp.jump(k - 1);
        acc = acc + Rational(step, ipow_checked(jp.p(), k));
        u.push_back(acc);
    }
    return u;
}

HasseArfVerdict hasse_arf_holds(const JumpProfile& jp) {
    HasseArfVerdict v;
    v.pass = true;
    v.upper_jumps = herbrand_upper_jumps(jp);
    v.coefficients.push_back(jp.jump(0));
    for (int k = 1; k < jp.n() && v.pass; ++k) {
        const int64 diff = jp.jump(k) - jp.jump(k - 1);
        const int64 pk = ipow_checked(jp.p(), k);
        if (diff % pk != 0) {
            // first violating index; coefficients keep the valid prefix
            v.pass = false;
            v.violation_index = k;
        } else {
            v.coefficients.push_back(diff / pk);
        }
    }
    bool all_integral = true;
    for (const Rational& r : v.upper_jumps)
        if (!r.is_integer()) all_integral = false;
    if (v.pass != all_integral)
        throw Error("internal: divisibility and Herbrand integrality disagree");
    return v;
}

} // namespace ramify
