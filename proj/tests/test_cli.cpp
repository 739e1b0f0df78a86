#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ICS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

} // namespace

TEST_CASE("enumerate counts and lists") {
    auto r = run_cli("enumerate \"chain(3)\" --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "7\n");

    auto listed = run_cli("enumerate \"chain(3)\"");
    CHECK(listed.exit_code == 0);
    CHECK(listed.output.find("{1,2,3}") != std::string::npos);

    auto big = run_cli("enumerate \"prod(chain(4),chain(4))\" --count-only");
    CHECK(big.output == "1146\n");

    auto all_subsets = run_cli("enumerate \"antichain(3)\" --count-only");
    CHECK(all_subsets.output == "8\n");
}

TEST_CASE("enumerate json output is stable across worker counts") {
    auto one = run_cli("enumerate \"prod(chain(2),chain(4))\" --format json --jobs 1");
    auto four = run_cli("enumerate \"prod(chain(2),chain(4))\" --format json --jobs 4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output.find("\"count\":71") != std::string::npos);

    auto csv = run_cli("enumerate \"chain(2)\" --format csv");
    CHECK(csv.output == "\n0\n1\n0,1\n");
}

TEST_CASE("orbits summary") {
    auto r = run_cli("orbits \"chain(4)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order: 6") != std::string::npos);
    CHECK(r.output.find("sizes: 2x1 3x1 6x1") != std::string::npos);

    auto osum = run_cli("orbits \"osum(2,2,2,2)\"");
    CHECK(osum.output.find("order: 12") != std::string::npos);

    auto anti = run_cli("orbits \"antichain(4)\" --format json");
    CHECK(anti.output.find("\"order\":2") != std::string::npos);
}

TEST_CASE("orbits dot export") {
    std::string path = "/tmp/ics_cli_test_graph.dot";
    std::remove(path.c_str());
    auto r = run_cli("orbits \"chain(2)\" --dot " + path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    fclose(f);
    std::remove(path.c_str());
}

TEST_CASE("homomesy exit codes distinguish verdicts") {
    auto pos = run_cli("homomesy \"prod(chain(2),chain(6))\" max_minus_min");
    CHECK(pos.exit_code == 0);
    CHECK(pos.output.find("homomesic with average 0") != std::string::npos);

    auto neg = run_cli("homomesy \"chain(3)\" cardinality");
    CHECK(neg.exit_code == 3);
    CHECK(neg.output.find("not homomesic") != std::string::npos);
    CHECK(neg.output.find("7/5") != std::string::npos);

    auto togg = run_cli("homomesy \"prod(chain(2),chain(2))\" \"toggleability:(2,2)\"");
    CHECK(togg.exit_code == 0);
    CHECK(togg.output.find("homomesic with average 0") != std::string::npos);
}

TEST_CASE("verify quick passes") {
    auto r = run_cli("verify quick");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0 failures") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("conjecture scans") {
    auto r45 = run_cli("conjecture 4.5 --budget 7");
    CHECK(r45.exit_code == 0);
    CHECK(r45.output.find("PASS") != std::string::npos);

    auto r46 = run_cli("conjecture 4.6 --budget 12");
    CHECK(r46.exit_code == 0);

    auto bad = run_cli("conjecture 9.9");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("enumerate \"chain(0)\"").exit_code == 2);
    CHECK(run_cli("enumerate \"pineapple(2)\"").exit_code == 2);
    CHECK(run_cli("homomesy \"chain(3)\" entropy").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("enumerate").exit_code == 2);
}

TEST_CASE("element cap blocks oversized posets unless acknowledged") {
    auto blocked = run_cli("enumerate \"chain(300)\" --count-only");
    CHECK(blocked.exit_code == 2);
    CHECK(blocked.output.find("cap") != std::string::npos);

    // raising the env without the acknowledgment flag is also refused
    setenv("ICS_MAX_ELEMENTS", "1024", 1);
    auto env_only = run_cli("enumerate \"chain(300)\" --count-only");
    CHECK(env_only.exit_code == 2);
    auto acknowledged =
        run_cli("enumerate \"chain(300)\" --count-only --ack-element-cap");
    unsetenv("ICS_MAX_ELEMENTS");
    CHECK(acknowledged.exit_code == 0);
    CHECK(acknowledged.output == "45151\n"); // C(300,2) + 300 + 1
}
