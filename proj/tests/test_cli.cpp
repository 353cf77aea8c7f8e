#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>

#include "ramify/automorphism.hpp"
#include "ramify/json_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RAMIFY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_CASE("analyze a sigma_m fixture") {
    // sigma_2 over F_3 (generated in process): order 3, jumps [2], s = [3], genus 1
    const ramify::DiskAutomorphism sigma2 = ramify::sigma_m_example(3, 2, 16);
    const RunResult r = run("analyze " + quote(ramify::to_json(sigma2.series()).dump()));
    CHECK(r.exit_code == 0);
    const json jr = json::parse(r.out);
    CHECK(jr.at("order") == 3);
    CHECK(jr.at("breaks") == json::array({2}));
    CHECK(jr.at("orbit_profile").at("s") == json::array({3}));
    CHECK(jr.at("genus").at("genus") == 1);

    // t/(1+t) over F_2, written out as a literal: every coefficient is 1
    const RunResult direct =
        run("analyze " + quote(R"({"p":2,"precision":8,"coeffs":[0,1,1,1,1,1,1,1]})"));
    CHECK(direct.exit_code == 0);
    const json j = json::parse(direct.out);
    CHECK(j.at("order") == 2);
    CHECK(j.at("breaks") == json::array({1}));
    CHECK(j.at("orbit_profile").at("s") == json::array({2}));
    CHECK(j.at("genus").at("genus") == 0);
    CHECK(j.at("hasse_arf").at("pass") == true);
    CHECK(j.at("different") == 2);
    CHECK(j.at("warnings") == json::array());
}

TEST_CASE("analyze an order-p^2 search fixture") {
    const auto fixtures = ramify::search_wild_torsion(2, 32, 2, 1, 5);
    const RunResult r = run("analyze " + quote(ramify::to_json(fixtures[0].series()).dump()));
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("order") == 4);
    CHECK(j.at("filtration").at("jumps").size() == 2);
    CHECK(j.at("hasse_arf").at("pass") == true);
}

TEST_CASE("analyze rejects bad input with the contracted exit codes") {
    CHECK(run("analyze " + quote(R"({"p":2,"precision":8,"coeffs":[0,1]})")).exit_code == 3);  // identity
    CHECK(run("analyze " + quote(R"({"p":2,"precision":8)")).exit_code == 2);                  // bad JSON
    CHECK(run("analyze " + quote(R"({"p":9,"precision":8,"coeffs":[0,1,1]})")).exit_code == 2);
    CHECK(run("analyze " + quote(R"({"p":3,"precision":8,"coeffs":[0,2,1]})")).exit_code == 3); // tame
    CHECK(run("analyze /nonexistent.json").exit_code == 2);
}

TEST_CASE("jumps2orbits and orbits2jumps") {
    const RunResult ok = run("jumps2orbits " + quote(R"({"p":2,"jumps":[1,3]})"));
    CHECK(ok.exit_code == 0);
    const json j = json::parse(ok.out);
    CHECK(j.at("s") == json::array({2, 2}));
    CHECK(j.at("i") == json::array({1, 1}));

    const RunResult bad = run("jumps2orbits " + quote(R"({"p":2,"jumps":[1,2]})"));
    CHECK(bad.exit_code == 4);
    CHECK(json::parse(bad.out).at("violation_index") == 1);

    const RunResult back = run("orbits2jumps " + quote(R"({"p":2,"s":[2,2]})"));
    CHECK(back.exit_code == 0);
    CHECK(json::parse(back.out).at("jumps") == json::array({1, 3}));

    // round trip is the identity on valid input
    const RunResult there = run("jumps2orbits " + quote(R"({"p":3,"jumps":[2,11,38]})"));
    CHECK(there.exit_code == 0);
    const RunResult again = run("orbits2jumps " + quote(json::parse(there.out).dump()));
    CHECK(again.exit_code == 0);
    CHECK(json::parse(again.out).at("jumps") == json::array({2, 11, 38}));

    // strict mode turns an even leading jump into a precondition failure
    CHECK(run("jumps2orbits --strict " + quote(R"({"p":2,"jumps":[2]})")).exit_code == 3);
    CHECK(run("orbits2jumps " + quote(R"({"p":2,"s":[2,3]})")).exit_code == 4);
    CHECK(run("orbits2jumps " + quote(R"({"p":2,"s":[1]})")).exit_code == 3);
}

TEST_CASE("lift-demo") {
    const RunResult r = run("lift-demo --p 2 --c 1 --depth 6 --precision 16");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("order_p_verified") == true);
    CHECK(j.at("break") == 1);
    CHECK(j.at("degree_law").at("pass") == true);
    CHECK(j.at("divisor").at("degree") == 2);
    CHECK(j.at("remultiplies") == true);
    CHECK(j.at("balance").at("pass") == true);

    CHECK(run("lift-demo --p 3").exit_code == 0);
    CHECK(run("lift-demo --p 4").exit_code == 3);   // not prime
    CHECK(run("lift-demo --p 2 --c 2").exit_code == 3);   // 2 is not a unit at p = 2
}

TEST_CASE("selfcheck determinism") {
    const RunResult a = run("selfcheck --budget quick --seed 42");
    const RunResult b = run("selfcheck --budget quick --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).at("pass") == true);
}

TEST_CASE("flag and subcommand errors") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("jumps2orbits --frobnicate x").exit_code == 2);
    CHECK(run("selfcheck --budget warp").exit_code == 2);
}

TEST_CASE("stdin input") {
    const std::string cmd = std::string("echo '") + R"({"p":2,"jumps":[1,3]})" + "' | " +
                            RAMIFY_CLI_PATH + " jumps2orbits - 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(json::parse(out).at("s") == json::array({2, 2}));
}

TEST_CASE("table format") {
    const RunResult r = run("--format table jumps2orbits " + quote(R"({"p":2,"jumps":[1,3]})"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("s") != std::string::npos);
}
