// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;

std::string tmp_path(const std::string &name) {
    return std::string("cli_test_") + name;
}

int run_cli(const std::string &args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("analytic subcommand reports unit gain for a single state") {
    const std::string out = tmp_path("analytic.csv");
    REQUIRE(run_cli("analytic --mu 10 --var 4 --psi 1 --out " + out) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("psi,avg_gain_integral") == 0);
    // Row for psi = 1 starts with "1," and a gain of 1 within tolerance.
    CHECK(csv.find("\n1,1") != std::string::npos);
}

TEST_CASE("unknown flags and invalid configs exit with code 2") {
    CHECK(run_cli("analytic --mu 10 --var 4 --bogus 1") == 2);
    CHECK(run_cli("pdf --trials 0 --out " + tmp_path("x.csv")) == 2);
}

TEST_CASE("infeasible exhaustive selection exits with code 3") {
    CHECK(run_cli("gain-avg --selector exhaustive --trials 2 --psi 1 --out " +
                  tmp_path("y.csv")) == 3);
}

TEST_CASE("pdf runs are byte-identical for a fixed seed") {
    const std::string a = tmp_path("pdf_a.csv");
    const std::string b = tmp_path("pdf_b.csv");
    const std::string args =
        "pdf --trials 200 --seed 42 --rho-db 0 --bins 30 --out ";
    REQUIRE(run_cli(args + a) == 0);
    REQUIRE(run_cli(args + b) == 0);
    const std::string ca = slurp(a);
    CHECK(!ca.empty());
    CHECK(ca == slurp(b));
}

TEST_CASE("dump-channels emits schema-1 JSON deterministically") {
    const std::string a = tmp_path("dump_a.json");
    const std::string b = tmp_path("dump_b.json");
    const std::string args =
        "dump-channels --seed 7 --psi 2 --trial 3 --out ";
    REQUIRE(run_cli(args + a) == 0);
    REQUIRE(run_cli(args + b) == 0);
    const std::string ja = slurp(a);
    CHECK(ja.find("\"schema\": 1") != std::string::npos);
    CHECK(ja == slurp(b));
}

TEST_CASE("gain-avg psi sweep produces one row per state count") {
    const std::string out = tmp_path("gain.csv");
    REQUIRE(run_cli("gain-avg --trials 50 --seed 3 --psi 1..3 --out " + out) ==
            0);
    const std::string csv = slurp(out);
    int lines = 0;
    for (char c : csv)
        if (c == '\n')
            ++lines;
    CHECK(lines == 4);  // header + 3 rows
}

int main(int argc, char **argv) {
    doctest::Context context;
    // The harness passes the CLI binary path as the first positional arg.
    if (argc > 1 && argv[argc - 1][0] != '-')
        g_cli = argv[--argc];
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-mmwsim-cli>\n");
        return 1;
    }
    context.applyCommandLine(argc, argv);
    return context.run();
}
