#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

// Paths are injected by the build: the binary under test and the directory
// of frozen outputs.
#ifndef MUNTZKIT_CLI_PATH
#error "MUNTZKIT_CLI_PATH must be defined"
#endif
#ifndef MUNTZKIT_GOLDEN_DIR
#error "MUNTZKIT_GOLDEN_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(MUNTZKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(MUNTZKIT_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("frozen outputs are reproduced byte for byte") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"approx sqrt --n 4", "sqrt_n4.json"},
        {"approx abs --a 2 --n 8 --grid-size 801", "abs_a2_n8.json"},
        {"lattice maxmin --f 1:1 --g 1:0,-1:1 --n 50", "lattice_n50.json"},
        {"dist span --q 2 --lambdas 0,1", "dist_span.json"},
        {"dist gram-oracle --q 2 --lambdas 0,1", "dist_oracle.json"},
        {"dist profile --q 0.5 --sequence '2*i+1' --n-max 5 --format csv", "profile.csv"},
        {"density check --sequence primes --n-max 5", "density_check.json"},
        {"density table --sequence i+1 --n-max 6 --format csv", "density_table.csv"},
        {"muntz construct --q 1 --lambdas 2,4", "muntz_construct.json"},
        {"muntz report --q 1 --sequence '2*i' --start 1 --n-max 6 --format csv",
         "muntz_report.csv"},
        {"primes euler --n 10 --exact", "euler_exact.json"},
        {"primes euler --n 12 --format csv", "euler_sweep.csv"},
        {"primes span --q 6 --n 4", "primes_span.json"},
        {"project --moments 0.33333333333333331,0.25 --lambdas 0,1 --norm2 0.2", "project.json"},
        {"dist span --q 1 --lambdas 0 --format table", "dist_table.txt"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(args);
        const RunResult r = run_cli(args);
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(file));
    }
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string args : {"dist span --q 2 --lambdas 0,1",
                                   "primes euler --n 12 --format csv",
                                   "muntz construct --q 1 --lambdas 2,4"}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("usage errors and bad values exit with 2, help with 0") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("dist span --q 1").exit_code == 2);                    // missing --lambdas
    CHECK(run_cli("dist span --q 1 --lambdas -0.2").exit_code == 2);     // out-of-range exponent
    CHECK(run_cli("muntz construct --q 2 --lambdas 1,2").exit_code == 2); // q collides with span
    CHECK(run_cli("dist span --q 1 --lambdas 0 --format yaml").exit_code == 2);
    CHECK(run_cli("density check --sequence nonsense --n-max 3").exit_code == 2);
}

TEST_CASE("negative exponents require the explicit opt-in") {
    CHECK(run_cli("dist span --q 1 --lambdas -0.2,3").exit_code == 2);
    const RunResult allowed = run_cli("dist span --q 1 --lambdas -0.2,3 --allow-negative");
    CHECK(allowed.exit_code == 0);
    CHECK(allowed.out.find("\"delta\"") != std::string::npos);
}

TEST_CASE("output files land under the configured directory") {
    char temp_template[] = "/tmp/muntzkit_cli_test_XXXXXX";
    char* temp_dir = mkdtemp(temp_template);
    REQUIRE(temp_dir != nullptr);
    setenv("MUNTZKIT_OUTPUT_DIR", temp_dir, 1);
    const RunResult r = run_cli("dist span --q 2 --lambdas 0,1 --output span.json");
    unsetenv("MUNTZKIT_OUTPUT_DIR");
    CHECK(r.exit_code == 0);
    const std::string path = std::string(temp_template) + "/span.json";
    CHECK(read_file(path) == golden("dist_span.json"));
    std::remove(path.c_str());
    std::remove(temp_template); // directory is empty now; best-effort cleanup
}

} // TEST_SUITE
