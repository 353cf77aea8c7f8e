// ramify: analyze wild automorphisms of the formal disk, translate jump and
// orbit profiles, run the Weierstrass lift demo, and run the self-check suite.
//
// Exit codes: 0 success (a FAIL verdict on synthetic input is still data),
// 1 self-check failure, 2 parse error, 3 precondition failure,
// 4 jump profile rejected by the divisibility constraint.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ramify/automorphism.hpp"
#include "ramify/cyclotomic.hpp"
#include "ramify/json_io.hpp"
#include "ramify/oort.hpp"
#include "ramify/ramification.hpp"
#include "ramify/selfcheck.hpp"
#include "ramify/weierstrass.hpp"

namespace {

using nlohmann::json;
using namespace ramify;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitHasseArf = 4;

std::string read_payload(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;   // inline JSON
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open input: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json load_json(const std::string& arg) {
    try {
        return json::parse(read_payload(arg));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void render_table(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            const std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object()))
                render_table(value, name, out);
            else
                out << "  " << name << std::string(name.size() < 36 ? 36 - name.size() : 1, ' ')
                    << value.dump() << "\n";
        }
    } else if (j.is_array()) {
        int idx = 0;
        for (const json& item : j) render_table(item, prefix + "[" + std::to_string(idx++) + "]", out);
    } else {
        out << "  " << prefix << "  " << j.dump() << "\n";
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "table")
        render_table(j, "", std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

json analyze(const std::string& input, bool strict) {
    const TruncatedSeries s = parse_series(load_json(input));
    const DiskAutomorphism a(s);
    if (a.is_identity())
        throw IndistinguishableFromIdentity("input is the identity to the stored precision");
    if (!a.wild()) throw NotWild("input has a tame part: linear coefficient differs from 1");

    const int n = order_exponent(a);
    const FiltrationReport fr = cyclic_filtration(a, n);
    const ArtinTable at = artin_table(fr);
    const JumpProfile jp = fr.jump_profile();
    const HasseArfVerdict verdict = hasse_arf_holds(jp);

    json out{{"input", to_json(s)},
             {"p", a.p()},
             {"precision", a.precision()},
             {"order_exponent", n},
             {"order", ipow_checked(a.p(), n)},
             {"breaks", fr.jumps()},
             {"filtration", to_json(fr)},
             {"artin", to_json(at)},
             {"different", different_valuation(fr)},
             {"hasse_arf", to_json(verdict)}};

    json warnings = json::array();
    if (!fr.leading_jump_prime_to_p())
        warnings.push_back("j_0 is divisible by p: not realizable by a finite-order "
                           "automorphism of k[[t]], only by a truncated one");
    try {
        const OrbitProfile op = jumps_to_orbits(jp, strict);
        out["orbit_profile"] = to_json(op);
        out["artin_identity"] = to_json(verify_artin_identity(fr, op));
        try {
            out["genus"] = to_json(genus_check(fr, op));
        } catch (const NonIntegralGenus& e) {
            out["genus"] = nullptr;
            warnings.push_back(std::string("genus: ") + e.what());
        }
    } catch (const HasseArfViolation& e) {
        out["orbit_profile"] = nullptr;
        warnings.push_back(std::string("orbit profile: ") + e.what());
    }
    out["warnings"] = warnings;
    return out;
}

json lift_demo(int64 p, const std::string& c_spec, int64 depth, int64 precision) {
    require_prime(p);
    if (depth < 1 || depth > 32) throw InvalidParameter("depth must lie in [1, 32]");
    if (precision < 4 || precision > 4096) throw InvalidParameter("precision must lie in [4, 4096]");

    std::vector<int64> coords;
    std::stringstream ss(c_spec);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            coords.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw ParseError("cannot parse unit coordinates: " + c_spec);
        }
    }
    const LiftScalar c(p, depth, coords);
    const LiftSeries sigma = homography_lift(p, c, static_cast<int>(precision));

    const bool order_ok =
        compose_power(sigma, static_cast<uint64>(p)) == lift_identity(p, depth, static_cast<int>(precision));
    const DiskAutomorphism reduced(reduce_series(sigma));
    const int64 m = break_number(reduced);
    const DistinguishedFactorization fac = fixed_point_divisor(sigma);
    const bool remultiplies =
        mul(fac.g_as_series(static_cast<int>(precision)), fac.u) ==
        sub(sigma, lift_identity(p, depth, static_cast<int>(precision)));

    // two-fibre balance at n = 1: the divisor degree is the fixed-point count
    const FiltrationReport fr = FiltrationReport::from_jumps(p, {m}, precision);
    const OrbitProfile op = jumps_to_orbits(fr.jump_profile());
    const ArtinIdentityReport balance = verify_artin_identity(fr, op);

    return json{{"p", p},
                {"depth", depth},
                {"precision", precision},
                {"c", to_json(c)},
                {"sigma", to_json(sigma)},
                {"order_p_verified", order_ok},
                {"reduction", to_json(reduced.series())},
                {"break", m},
                {"divisor", to_json(fac)},
                {"degree_law", json{{"degree", fac.degree}, {"break_plus_one", m + 1}, {"pass", fac.degree == m + 1}}},
                {"remultiplies", remultiplies},
                {"fixed_points_match_divisor", fac.degree == fixed_point_count(op, 0)},
                {"balance", to_json(balance)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramification filtrations of wild automorphisms of the formal disk"};
    app.require_subcommand(1);
    app.fallthrough();   // allow --format after the subcommand as well

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

    std::string input;
    bool strict = false;
    uint64 seed = 20240917ULL;

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full report for a series fixture");
    cmd_analyze->add_option("input", input, "path, '-' for stdin, or inline JSON")->required();
    cmd_analyze->add_flag("--strict", strict, "require gcd(j_0, p) = 1");

    CLI::App* cmd_j2o = app.add_subcommand("jumps2orbits", "jump profile -> orbit profile");
    cmd_j2o->add_option("input", input, "path, '-' for stdin, or inline JSON")->required();
    cmd_j2o->add_flag("--strict", strict, "require gcd(j_0, p) = 1");

    CLI::App* cmd_o2j = app.add_subcommand("orbits2jumps", "orbit profile -> jump profile");
    cmd_o2j->add_option("input", input, "path, '-' for stdin, or inline JSON")->required();
    cmd_o2j->add_flag("--strict", strict, "require gcd(j_0, p) = 1");

    int64 lift_p = 2;
    std::string lift_c = "1";
    int64 depth = 6;
    int64 precision = 16;
    CLI::App* cmd_lift = app.add_subcommand("lift-demo", "order-p homography lift and its Weierstrass divisor");
    cmd_lift->add_option("--p", lift_p, "prime")->required();
    cmd_lift->add_option("--c", lift_c, "unit coordinates, comma separated (default 1)");
    cmd_lift->add_option("--depth", depth, "ring depth M (coefficients mod p^M)");
    cmd_lift->add_option("--precision", precision, "series precision N");

    std::string budget = "default";
    CLI::App* cmd_check = app.add_subcommand("selfcheck", "run the invariant sweeps");
    cmd_check->add_option("--budget", budget, "quick | default | deep")
        ->check(CLI::IsMember({"quick", "default", "deep"}));
    cmd_check->add_option("--seed", seed, "RNG seed for the randomized sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*cmd_analyze) {
            emit(analyze(input, strict), format);
        } else if (*cmd_j2o) {
            const JumpProfile jp = parse_jump_profile(load_json(input));
            emit(to_json(jumps_to_orbits(jp, strict)), format);
        } else if (*cmd_o2j) {
            const OrbitProfile op = parse_orbit_profile(load_json(input), strict);
            emit(to_json(orbits_to_jumps(op)), format);
        } else if (*cmd_lift) {
            emit(lift_demo(lift_p, lift_c, depth, precision), format);
        } else if (*cmd_check) {
            const SelfCheckReport report = run_selfcheck(budget, seed);
            emit(to_json(report), format);
            return report.pass ? kExitOk : kExitCheckFailed;
        }
        return kExitOk;
    } catch (const HasseArfViolation& e) {
        emit(json{{"error", "HasseArfViolation"}, {"violation_index", e.index}, {"message", e.what()}},
             format);
        return kExitHasseArf;
    } catch (const ParseError& e) {
        emit(json{{"error", "ParseError"}, {"message", e.what()}}, format);
        return kExitParse;
    } catch (const Error& e) {
        emit(json{{"error", "PreconditionFailure"}, {"message", e.what()}}, format);
        return kExitPrecondition;
    } catch (const std::exception& e) {
        emit(json{{"error", "InternalError"}, {"message", e.what()}}, format);
        return kExitPrecondition;
    }
}
