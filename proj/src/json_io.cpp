#include "ramify/json_io.hpp"

#include <string>

namespace ramify {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int64 require_int(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("\"") + key + "\" must be an integer");
    return v.get<int64>();
}

std::vector<int64> require_int_array(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<int64> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_number_integer())
            throw ParseError(std::string("\"") + key + "\" must hold integers");
        out.push_back(e.get<int64>());
    }
    return out;
}

int64 parse_prime(const json& j) {
    const int64 p = require_int(j, "p");
    if (p < 2 || p > (int64{1} << 31) || !is_prime(p))
        throw ParseError("\"p\" must be a small prime, got " + std::to_string(p));
    return p;
}

} // namespace

json to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const Fp& c : s.coeffs()) coeffs.push_back(c.value());
    return json{{"p", s.proto().prime()}, {"precision", s.precision()}, {"coeffs", coeffs}};
}

TruncatedSeries parse_series(const json& j) {
    const int64 p = parse_prime(j);
    const int64 precision = require_int(j, "precision");
    if (precision < 1 || precision > 4096)
        throw ParseError("\"precision\" out of range (desk scale: 1..4096)");
    const std::vector<int64> coeffs = require_int_array(j, "coeffs");
    if (static_cast<int64>(coeffs.size()) > precision)
        throw ParseError("more coefficients than the declared precision");
    for (int64 c : coeffs)
        if (c < 0 || c >= p) throw ParseError("series coefficients must lie in [0, p)");
    return make_series(p, static_cast<int>(precision), coeffs);
}

json to_json(const JumpProfile& jp) {
    return json{{"p", jp.p()}, {"n", jp.n()}, {"jumps", jp.jumps()}};
}

JumpProfile parse_jump_profile(const json& j) {
    const int64 p = parse_prime(j);
    const std::vector<int64> jumps = require_int_array(j, "jumps");
    if (j.contains("n") && require_int(j, "n") != static_cast<int64>(jumps.size()))
        throw ParseError("\"n\" disagrees with the number of jumps");
    return JumpProfile(p, jumps);
}

json to_json(const FiltrationReport& fr) {
    json orders = json::array();
    for (const auto& [i, order] : fr.group_order_table()) orders.push_back(json::array({i, order}));
    return json{{"p", fr.p()},
                {"n", fr.n()},
                {"jumps", fr.jumps()},
                {"group_orders", orders},
                {"precision_used", fr.precision_used()}};
}

json to_json(const ArtinTable& at) {
    json classes = json::array();
    for (const ArtinClass& c : at.classes())
        classes.push_back(json{{"k", c.k}, {"break", c.break_j}, {"size", c.size}, {"ar", c.value}});
    return json{{"p", at.p()}, {"n", at.n()}, {"f", 1}, {"classes", classes}, {"ar_one", at.at_identity()}};
}

json to_json(const Rational& r) { return json::array({r.num(), r.den()}); }

json to_json(const HasseArfVerdict& v) {
    json upper = json::array();
    for (const Rational& r : v.upper_jumps) upper.push_back(to_json(r));
    json out{{"pass", v.pass}, {"coefficients", v.coefficients}, {"upper_jumps", upper}};
    if (v.violation_index)
        out["violation_index"] = *v.violation_index;
    else
        out["violation_index"] = nullptr;
    return out;
}

json to_json(const OrbitProfile& op) {
    return json{{"p", op.p()},
                {"n", op.n()},
                {"s", op.counts()},
                {"i", op.orbit_counts()},
                {"strict", op.strict()}};
}

OrbitProfile parse_orbit_profile(const json& j, bool strict) {
    const int64 p = parse_prime(j);
    const std::vector<int64> counts = require_int_array(j, "s");
    if (j.contains("n") && require_int(j, "n") != static_cast<int64>(counts.size()))
        throw ParseError("\"n\" disagrees with the number of levels");
    bool strict_flag = strict;
    if (j.contains("strict")) {
        const json& v = j.at("strict");
        if (!v.is_boolean()) throw ParseError("\"strict\" must be a boolean");
        strict_flag = strict_flag || v.get<bool>();
    }
    return OrbitProfile(p, counts, strict_flag);
}

json to_json(const DifferentBalance& b) {
    return json{{"special", b.special}, {"generic", b.generic}, {"balanced", b.balanced}};
}

json to_json(const ArtinIdentityReport& r) {
    json rows = json::array();
    for (const ArtinIdentityRow& row : r.rows)
        rows.push_back(json{{"k", row.k}, {"special", row.special}, {"generic", row.generic}, {"pass", row.pass}});
    return json{{"classes", rows}, {"different", to_json(r.different)}, {"pass", r.pass}};
}

json to_json(const GenusCheck& g) {
    return json{{"genus", g.genus},
                {"balanced", g.balanced},
                {"euler_special", g.euler_special},
                {"euler_generic", g.euler_generic}};
}

json to_json(const OracleEntry& e) {
    return json{{"s", e.counts}, {"fixed_point_counts", e.fixed_point_counts}, {"jumps", e.jumps}};
}

json to_json(const LiftScalar& c) {
    return json{{"p", c.prime()}, {"M", c.depth()}, {"coords", c.coords()}};
}

LiftScalar parse_lift_scalar(const json& j) {
    const int64 p = parse_prime(j);
    const int64 depth = require_int(j, "M");
    if (depth < 1 || depth > 64) throw ParseError("\"M\" out of range");
    const std::vector<int64> coords = require_int_array(j, "coords");
    if (static_cast<int64>(coords.size()) > p - 1)
        throw ParseError("a lift scalar has at most p-1 coordinates");
    LiftScalar out(p, depth, coords);
    for (int64 c : coords)
        if (c < 0 || c >= out.modulus())
            throw ParseError("lift scalar coordinates must lie in [0, p^M)");
    return out;
}

json to_json(const LiftSeries& f) {
    json coeffs = json::array();
    for (const LiftScalar& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"p", f.proto().prime()},
                {"M", f.proto().depth()},
                {"precision", f.precision()},
                {"coeffs", coeffs}};
}

LiftSeries parse_lift_series(const json& j) {
    const int64 p = parse_prime(j);
    const int64 depth = require_int(j, "M");
    if (depth < 1 || depth > 64) throw ParseError("\"M\" out of range");
    const int64 precision = require_int(j, "precision");
    if (precision < 1 || precision > 10000) throw ParseError("\"precision\" out of range");
    const json& coeffs = require_key(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
    if (static_cast<int64>(coeffs.size()) > precision)
        throw ParseError("more coefficients than the declared precision");
    std::vector<LiftScalar> c;
    c.reserve(static_cast<std::size_t>(precision));
    for (const json& e : coeffs) {
        LiftScalar sc = parse_lift_scalar(e);
        if (sc.prime() != p || sc.depth() != depth)
            throw ParseError("lift series coefficients must share p and M with the series");
        c.push_back(std::move(sc));
    }
    while (static_cast<int64>(c.size()) < precision) c.push_back(LiftScalar::zero(p, depth));
    return LiftSeries(std::move(c));
}

json to_json(const DistinguishedFactorization& f) {
    json g = json::array();
    for (const LiftScalar& c : f.g) g.push_back(to_json(c));
    return json{{"degree", f.degree}, {"g", g}, {"u", to_json(f.u)}};
}

} // namespace ramify
