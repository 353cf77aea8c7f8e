#pragma once

#include <optional>
#include <vector>

#include "filtration.hpp"
#include "rational.hpp"

namespace ramify {

// One conjugacy-class row of the Artin class function on a cyclic p^n-group:
// the p^{n-k} - p^{n-k-1} elements of exact break j_k all take the value
// -(j_k + 1) (residue degree fixed at 1, order function i(sigma) = v(sigma t - t)).
struct ArtinClass {
    int k;
    int64 break_j;
    int64 size;
    int64 value;
};

class ArtinTable {
public:
    ArtinTable(int64 p, int n, std::vector<ArtinClass> classes, int64 at_identity)
        : p_(p), n_(n), classes_(std::move(classes)), at_identity_(at_identity) {}

    int64 p() const { return p_; }
    int n() const { return n_; }
    const std::vector<ArtinClass>& classes() const { return classes_; }
    // ar(1) = sum over nontrivial classes of size * (j_k + 1); this is also
    // the valuation of the different
    int64 at_identity() const { return at_identity_; }

private:
    int64 p_;
    int n_;
    std::vector<ArtinClass> classes_;
    int64 at_identity_;
};

ArtinTable artin_table(const FiltrationReport& fr);

// sum_{i >= 0} (|G_i| - 1), computed from the subgroup-order table; always
// equals artin_table(fr).at_identity(), which is computed class by class.
int64 different_valuation(const FiltrationReport& fr);

// Upper-numbering jumps through the Herbrand reparametrization:
// u_0 = j_0, u_k = u_{k-1} + (j_k - j_{k-1}) / p^k.  Exact rationals.
std::vector<Rational> herbrand_upper_jumps(const JumpProfile& jp);

struct HasseArfVerdict {
    bool pass;
    // i_0 = j_0 and i_k = (j_k - j_{k-1}) / p^k; on FAIL only the prefix
    // before the first violation is recorded
    std::vector<int64> coefficients;
    std::vector<Rational> upper_jumps;
    std::optional<int> violation_index;
};

// PASS exactly when p^k divides j_k - j_{k-1} for every k >= 1, i.e. when
// j_k = i_0 + i_1 p + ... + i_k p^k with nonnegative integers i_l; checked
// both directly and through integrality of the upper jumps.
HasseArfVerdict hasse_arf_holds(const JumpProfile& jp);

} // namespace ramify
