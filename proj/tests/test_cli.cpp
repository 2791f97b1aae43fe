// Golden tests for the CLI: byte-identical JSON for fixed inputs, exit
// codes, and thread-count invariance. The binary path arrives in the
// HERMLOC_CLI_BIN environment variable (set by CTest).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
    const char* env = std::getenv("HERMLOC_CLI_BIN");
    REQUIRE_MESSAGE(env != nullptr, "HERMLOC_CLI_BIN not set");
    return env;
}

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

TEST_CASE("golden: mu") {
    RunResult r = run_cli("mu --q 3 --a 1 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"mu\":\"8\"}\n");
}

TEST_CASE("golden: density") {
    RunResult r = run_cli("density --q 3 --form diag --a 0 --b 0 --eps1 1 --s split");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"q\":3,\"form\":\"diag\",\"coeffs\":[\"1\",\"4\",\"-1\"],"
          "\"value_at_1\":\"4\",\"alpha_prime\":\"-2\"}\n");
}

TEST_CASE("golden: normalize") {
    RunResult r = run_cli("normalize --p 3 --gram '[[1,0],[0,3]]'");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"form\":\"diag\",\"a\":1,\"b\":0,\"eps1\":1,"
          "\"fundamental_invariant\":[3,1],\"chi\":1}\n");
}

TEST_CASE("golden: decompose and assemble") {
    RunResult r = run_cli("decompose --a 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[{\"kind\":\"Z0\",\"s\":0,\"multiplicity\":1},"
          "{\"kind\":\"Zs+\",\"s\":1,\"multiplicity\":1},"
          "{\"kind\":\"Zs-\",\"s\":1,\"multiplicity\":1},"
          "{\"kind\":\"Exc\",\"s\":0,\"multiplicity\":2}]\n");

    RunResult a = run_cli("assemble --q 3 --a 1 --b 1");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("\"I\":\"-8\"") != std::string::npos);
    CHECK(a.out.find("\"II\":\"12\"") != std::string::npos);
    CHECK(a.out.find("\"III\":\"4\"") != std::string::npos);
    CHECK(a.out.find("\"total\":\"8\"") != std::string::npos);
    CHECK(a.out.find("\"mu\":\"8\"") != std::string::npos);
}

TEST_CASE("count: stability flag and thread invariance") {
    std::string base = "count --p 3 --ell 1 --S '[[2,0],[0,1]]' --T '[[2,0],[0,1]]'";
    RunResult r1 = run_cli(base + " --threads 1");
    RunResult r3 = run_cli(base + " --threads 3");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r3.out);
    CHECK(r1.out.find("\"normalized_alpha\":\"4\"") != std::string::npos);
    CHECK(r1.out.find("\"stable\":true") != std::string::npos);

    // herm convention reports the same normalized density
    RunResult rh = run_cli(base + " --convention herm");
    CHECK(rh.out.find("\"normalized_alpha\":\"4\"") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes") {
    RunResult ok = run_cli("verify assembly --q-set 3 --a-max 3");
    CHECK(ok.exit_code == 0);
    RunResult kr = run_cli("verify kr --q-set 3,5 --a-max 3");
    CHECK(kr.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("normalize --p 3 --gram '[[1,2],[3,4]]'").exit_code == 2);
    CHECK(run_cli("density --q 3 --form diag --a 0 --b 0 --eps1 1").exit_code == 2);
    CHECK(run_cli("mu --q 3 --a 1").exit_code == 2);
}

TEST_CASE("budget errors exit 3") {
    RunResult r = run_cli("count --p 3 --ell 2 --S '[[2,0],[0,1]]' --T '[[2,0],[0,1]]' "
                          "--budget 1000");
    CHECK(r.exit_code == 3);
}

TEST_CASE("count with a 4x4 padded S through the grammar") {
    // S = Diag(2,1) + H at p = 3, T = Diag(1,-1): the r = 1 interpolation
    // value alpha(S,T,X)|_{X=1/9} of the split formula at a = b = 0.
    std::string S =
        "[[2,0,0,0],[0,1,0,0],[0,0,0,1/3*pi],[0,0,-1/3*pi,0]]";
    RunResult r = run_cli("count --p 3 --ell 1 --S '" + S + "' --T '[[1,0],[0,-1]]'");
    CHECK(r.exit_code == 0);
    // 1 + 4X - X^2 at X = 1/9: 1 + 4/9 - 1/81 = 116/81
    CHECK(r.out.find("\"normalized_alpha\":\"116/81\"") != std::string::npos);
}
