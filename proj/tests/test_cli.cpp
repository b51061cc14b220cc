#include <doctest.h>

#include <fstream>

#include "test_util.hpp"

using testutil::cli_path;
using testutil::run_command;

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

#define REQUIRE_CLI()                                       \
    const char* bin = cli_path();                           \
    if (!bin) {                                             \
        MESSAGE("CELLRES_BIN not set; skipping CLI case");  \
        return;                                             \
    }

}  // namespace

TEST_CASE("cli: order prints colon sets and is deterministic") {
    REQUIRE_CLI();
    std::string cmd = std::string(bin) + " order 'x1*x2, x1*x3, x2*x3' -n 3 --regular";
    auto res = run_command(cmd);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("q = {x2}") != std::string::npos);
    CHECK(res.output.find("q = {x1}") != std::string::npos);
    CHECK(res.output.find("regular: yes") != std::string::npos);
    CHECK(run_command(cmd).output == res.output);  // byte-deterministic
}

TEST_CASE("cli: trivial ideals") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) + " order 'x1' -n 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("u_1 = x1") != std::string::npos);

    auto point = run_command(std::string(bin) + " complex 'x1^2' -n 1");
    CHECK(point.exit_code == 0);
    CHECK(point.output.find("X: f = (1), chi = 1") != std::string::npos);
}

TEST_CASE("cli: no admissible order exits 2") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) + " order 'x1*x2, x3*x4' -n 4");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("no admissible order") != std::string::npos);
}

TEST_CASE("cli: parse errors exit 1") {
    REQUIRE_CLI();
    CHECK(run_command(std::string(bin) + " order 'x9' -n 3").exit_code == 1);
    CHECK(run_command(std::string(bin) + " order '' -n 3").exit_code == 1);
    CHECK(run_command(std::string(bin) + " bogus-subcommand").exit_code == 1);
}

TEST_CASE("cli: resolve emits ranks and the betti table") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) +
                           " resolve 'x1^2,x1*x2,x2^2,x1*x3,x2*x3,x3^2' -n 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("ranks: 1 6 8 3") != std::string::npos);
    CHECK(res.output.find("minimal: yes") != std::string::npos);

    auto koszul = run_command(std::string(bin) + " resolve 'x1^3' -n 1");
    CHECK(koszul.exit_code == 0);
    CHECK(koszul.output.find("ranks: 1 1") != std::string::npos);
}

TEST_CASE("cli: complex prints f-vectors") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) +
                           " complex 'x1^2,x1*x2,x2^2,x1*x3,x2*x3,x3^2' -n 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("X: f = (6, 8, 3), chi = 1") != std::string::npos);
    CHECK(res.output.find("Lambda: f = (6, 9, 4), chi = 1") != std::string::npos);
}

TEST_CASE("cli: verify passes and fault injection fails") {
    REQUIRE_CLI();
    std::string base = std::string(bin) + " verify 'x1*x2,x1*x3,x2*x3' -n 3";
    auto good = run_command(base);
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("all checks passed") != std::string::npos);

    auto bad = run_command(base + " --flip-sign 2");
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("cli: verify skips the oracle above the generator bound") {
    REQUIRE_CLI();
    // Spanning trees of K4: 16 generators, above the default bound of 14.
    auto res = run_command(std::string(bin) +
                           " gen graphic '1-2,1-3,1-4,2-3,2-4,3-4' --json /tmp/cellres_k4.json");
    REQUIRE(res.exit_code == 0);
    auto verify = run_command(std::string(bin) + " verify @/tmp/cellres_k4.json");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("skipped: m exceeds the oracle bound") != std::string::npos);
    CHECK(verify.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli: oracle") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) + " oracle 'x1*x2,x1*x3,x2*x3' -n 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("total: 1 3 2") != std::string::npos);
}

TEST_CASE("cli: gen subcommands") {
    REQUIRE_CLI();
    auto stable = run_command(std::string(bin) + " gen stable 'x2^2' -n 2");
    CHECK(stable.exit_code == 0);
    CHECK(stable.output.find("x1^2") != std::string::npos);
    CHECK(stable.output.find("3 generators") != std::string::npos);

    auto uniform = run_command(std::string(bin) + " gen uniform '2 3'");
    CHECK(uniform.exit_code == 0);
    CHECK(uniform.output.find("3 generators") != std::string::npos);

    auto graphic = run_command(std::string(bin) + " gen graphic '1-2,1-3,2-3'");
    CHECK(graphic.exit_code == 0);
    CHECK(graphic.output.find("3 generators") != std::string::npos);

    auto sqfree = run_command(std::string(bin) + " gen sqfree 'x2*x3' -n 3");
    CHECK(sqfree.exit_code == 0);
    CHECK(sqfree.output.find("x1*x2") != std::string::npos);
}

TEST_CASE("cli: json round trip through a file") {
    REQUIRE_CLI();
    std::string dir = "/tmp/cellres_test";
    run_command("mkdir -p " + dir);
    std::string json_path = dir + "/ideal.json";
    auto gen = run_command(std::string(bin) + " gen uniform '2 3' --json " +
                           quoted(json_path));
    CHECK(gen.exit_code == 0);
    auto verify = run_command(std::string(bin) + " verify @" + json_path);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli: resolve json payload follows the schema") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) +
                           " resolve 'x1*x2,x1*x3,x2*x3' -n 3 --json - ");
    CHECK(res.exit_code == 0);
    for (const char* key : {"\"ranks\"", "\"maps\"", "\"entries\"", "\"row\"", "\"col\"",
                            "\"sign\"", "\"mono\"", "\"order\"", "\"q\"", "\"beta\""})
        CHECK(res.output.find(key) != std::string::npos);
}

TEST_CASE("cli: complex json payload follows the schema") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) +
                           " complex 'x1*x2,x1*x3,x2*x3' -n 3 --json - ");
    CHECK(res.exit_code == 0);
    for (const char* key : {"\"cells\"", "\"dim\"", "\"u\"", "\"sigma\"", "\"label\"",
                            "\"faces\"", "\"vertices\"", "\"facets\""})
        CHECK(res.output.find(key) != std::string::npos);
}

TEST_CASE("cli: explicit non-admissible order is rejected with a witness") {
    REQUIRE_CLI();
    auto res = run_command(std::string(bin) +
                           " order 'x1^2, x1*x2, x2^2' -n 2 --order 2,0,1");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("step 2") != std::string::npos);
    CHECK(res.output.find("x2^2") != std::string::npos);
}
