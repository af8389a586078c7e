#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks against the installed binary: exit codes are a stable
// contract and JSON output must parse against the documented schema.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string tmp = "./cli_out.txt";
    const std::string cmd = std::string(KS_CLI_PATH) + " " + args + " >" + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(tmp);
    r.output.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    std::remove(tmp.c_str());
    return r;
}

} // namespace

TEST_CASE("ratio at the x = 0 limit") {
    RunResult r = run("ratio --family f --n 1 --x 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("limit") != std::string::npos);
    CHECK(r.output.find("6.666666666666666") != std::string::npos);
}

TEST_CASE("printed values round-trip within the error bound") {
    RunResult r = run("ratio --family g --n 2 --x 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    double printed = std::stod(j.at("value").get<std::string>());
    double err = std::stod(j.at("abs_error_bound").get<std::string>());
    double want = 1.1321780550588932044; // mpmath, 40 digits
    CHECK(std::fabs(printed - want) <= err + 1e-15 * want);
}

TEST_CASE("verify-bounds passes") {
    RunResult r = run("verify-bounds --n 1..3 --x-max 20 --samples 60");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("PASS", 0) == 0);
}

TEST_CASE("scan-abc domain skip maps to exit 2") {
    RunResult r = run("scan-abc --a 1 --b 0.5 --c 1 --x-max 10");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("skipped_domain 1") != std::string::npos);
}

TEST_CASE("reciprocal control maps to exit 1 with a witness") {
    RunResult r = run("verify-monotone --family g --n 1 --reciprocal --x-max 10 --samples 24");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("violation") != std::string::npos);
    CHECK(r.output.find("witness") != std::string::npos);
}

TEST_CASE("usage and domain errors map to exit 3") {
    CHECK(run("eval --a 1,2 --b 3 --x 1.5").exit_code == 3); // p = q+1, x >= 1
    CHECK(run("ratio --family f --n 0 --x 1").exit_code == 3);
    CHECK(run("ratio --family nosuch --n 1 --x 1").exit_code != 0);
    CHECK(run("eval --b 3").exit_code != 0); // missing required --x
}

TEST_CASE("json outputs parse and carry the schema version") {
    RunResult scan = run("scan-abc --a 1 --b 3..4 --c 1 --x-max 5 --samples 16 --format json");
    CHECK(scan.exit_code == 0);
    auto j = nlohmann::json::parse(scan.output);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("kind") == "scan");
    CHECK(j.at("cells").size() == 2);
    for (const auto& cell : j.at("cells")) {
        CHECK(cell.contains("params"));
        CHECK(cell.at("verdict") == "increasing");
        CHECK(cell.contains("witness"));
        CHECK(cell.contains("min_derivative"));
        CHECK(cell.contains("samples"));
    }
    CHECK(j.at("metadata").contains("grid_hash"));

    RunResult vb = run("verify-bounds --n 1..2 --x-max 5 --samples 20 --format json");
    CHECK(vb.exit_code == 0);
    auto b = nlohmann::json::parse(vb.output);
    CHECK(b.at("schema_version") == 1);
    CHECK(b.at("kind") == "bounds");
    CHECK(b.at("pass") == true);

    RunResult vm = run("verify-monotone --family f --n 1..2 --x-max 5 --samples 16 --format json");
    CHECK(vm.exit_code == 0);
    auto c = nlohmann::json::parse(vm.output);
    CHECK(c.at("kind") == "conjecture");
    CHECK(c.at("cells").size() == 2);
}

TEST_CASE("csv trace format") {
    RunResult r = run("ratio --family f --n 1 --x-max 3 --samples 10 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("x,value,derivative,error_bound\n", 0) == 0);
}

TEST_CASE("scan --out writes the result file and --resume reuses it") {
    const std::string path = "./cli_scan.json";
    std::remove(path.c_str());
    RunResult first = run("scan-abc --a 1 --b 3,4 --c 1 --x-max 5 --samples 16 --out " + path);
    CHECK(first.exit_code == 0);
    {
        std::ifstream f(path);
        REQUIRE(f.good());
        auto j = nlohmann::json::parse(f);
        CHECK(j.at("cells").size() == 2);
    }
    RunResult again = run("scan-abc --a 1 --b 3,4 --c 1 --x-max 5 --samples 16 --resume --out " + path);
    CHECK(again.exit_code == 0);
    CHECK(again.output.find("(0 computed)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("precision ceiling env var is validated") {
    RunResult r = run("verify-monotone --family f --n 1 --x-max 2 --samples 16");
    CHECK(r.exit_code == 0);
    const std::string cmd =
        std::string("KUMMERSCAN_MAX_PREC_BITS=banana ") + KS_CLI_PATH +
        " verify-monotone --family f --n 1 --x-max 2 --samples 16 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
