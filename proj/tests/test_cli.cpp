#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

struct RunOutput {
    int exit_code;
    std::string stdout_text;
};

// Runs the CLI under test; stderr is dropped so diagnostics stay off stdout.
RunOutput run_cli(const std::string& args) {
    const char* cli = std::getenv("SUSA_CLI_PATH");
    REQUIRE(cli != nullptr);
    std::string command = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("eval handles anchored arithmetic") {
    auto r = run_cli("eval \"0;30,50 - 0;27,30\" --format sex");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "0;3,20\n");

    r = run_cli("eval \"1/3 + 1/3 + 1/3\" --format rat");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1\n");

    r = run_cli("eval \"(0;6,40 + 0;3,20) * 6\" --format both");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1 = 1\n");

    r = run_cli("eval \"2 ^ -2\" --format rat");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1/4\n");
}

TEST_CASE("eval anchors floating numerals only when told how") {
    auto r = run_cli("eval \"sqrt(3,50,35,23,27,24,26,40)\" --anchor 0 --format sex");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "15,11,6,40\n");

    r = run_cli("eval \"4,41,40\"");
    CHECK(r.exit_code == 1); // no --anchor for a floating numeral

    r = run_cli("eval \"4,41,40\" --anchor -3 --format rat");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "169/2160\n");
}

TEST_CASE("eval reports domain errors with exit code 1") {
    CHECK(run_cli("eval \"1/0\"").exit_code == 1);
    CHECK(run_cli("eval \"sqrt(2)\"").exit_code == 1);
    CHECK(run_cli("eval \"1 +\"").exit_code == 1);
    CHECK(run_cli("eval \"0;60\"").exit_code == 1);
}

TEST_CASE("plain mode falls back to rational for irregular denominators") {
    auto r = run_cli("eval \"1/7\" --format sex");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1/7\n"); // warning goes to stderr

    // In JSON mode the same request is a hard error.
    r = run_cli("eval \"1/7\" --format sex --json");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("\"error\": \"NonTerminating\"") != std::string::npos);

    r = run_cli("eval \"1/7\" --format rat --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"rational\": \"1/7\"") != std::string::npos);
}

TEST_CASE("factor and recip mirror the tablet arithmetic") {
    auto r = run_cli("factor \"3,50,35,23,27,24,26,40\" --anchor 0");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "10758400000000 = 2^14 * 5^8 * 41^2  (irregular)\n");

    r = run_cli("factor 2160000");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("(regular)") != std::string::npos);

    r = run_cli("recip \"26,40\" --anchor 0 --format sex");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "0;0,2,15\n");

    CHECK(run_cli("factor 0").exit_code == 1);
    CHECK(run_cli("recip 0").exit_code == 1);
}

TEST_CASE("table lists regular numbers ascending") {
    auto r = run_cli("table 10");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "1\t1\n2\t0;30\n3\t0;20\n4\t0;15\n5\t0;12\n6\t0;10\n"
          "8\t0;7,30\n9\t0;6,40\n10\t0;6\n");
}

TEST_CASE("problem list names every corpus entry") {
    auto r = run_cli("problem list");
    CHECK(r.exit_code == 0);
    for (const char* id : {"smt8.1", "smt8.2", "smt11.1", "smt11.2", "smt17",
                           "smt19", "modern.1", "modern.2", "modern.3",
                           "modern.4", "modern.5"})
        CHECK(r.stdout_text.find(id) != std::string::npos);
}

TEST_CASE("problem run prints the solution and optional trace") {
    auto r = run_cli("problem run smt19 --mode scribal");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("y = 30 = 30") != std::string::npos);
    CHECK(r.stdout_text.find("d = 50 = 50") != std::string::npos);

    r = run_cli("problem run smt19 --mode scribal --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("L9  SquareRoot(10758400000000) -> 3280000") !=
          std::string::npos);
    CHECK(r.stdout_text.find("[reconstructed]") != std::string::npos);
    CHECK(r.stdout_text.find("[sic:") != std::string::npos);
}

TEST_CASE("unknown problems exit with the usage code") {
    auto r = run_cli("problem run nosuch");
    CHECK(r.exit_code == 2);
    r = run_cli("problem verify nosuch");
    CHECK(r.exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("problem verify reports per-equation results") {
    auto r = run_cli("problem verify smt17");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("all equations satisfied") != std::string::npos);

    r = run_cli("problem verify smt17 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"all_satisfied\": true") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
    for (const char* invocation :
         {"eval \"0;6,40 * 0;6,40\" --json",
          "problem run smt8.1 --mode scribal --json --trace",
          "problem run smt19 --mode modern --json",
          "table 100 --json"}) {
        auto a = run_cli(invocation);
        auto b = run_cli(invocation);
        CHECK(a.exit_code == 0);
        REQUIRE(a.stdout_text == b.stdout_text);
        REQUIRE(!a.stdout_text.empty());
    }
}
