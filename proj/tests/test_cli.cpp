// Exercises the installed command-line surface end to end: output grammar,
// JSON round-trips and the exit-code contract (0 verified, 1 failed, 2
// invalid input).

#include <riccati/io.hpp>
#include <riccati/riccati.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(RICCATI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer{};
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("construct") {
    const auto text = run("construct --i 1 --format text");
    REQUIRE(text.exit_code == 0);
    REQUIRE(text.out == "(-1 + 864*x)/12\n");

    const auto json = run("construct --i 7 --format json");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out ==
            "{\"var\":\"x\",\"num\":[\"7\",\"-1728\",\"746496\"],\"den\":[\"-12\",\"10368\"]}\n");

    const auto latex = run("construct --i 5 --format latex");
    REQUIRE(latex.exit_code == 0);
    REQUIRE(latex.out == "\\frac{-5 + 4320 x}{12}\n");

    REQUIRE(run("construct --i 2").exit_code == 2);
    REQUIRE(run("construct --i 0").exit_code == 2);
}

TEST_CASE("construct json round-trips to the in-memory form") {
    using riccati::AdmissibleIndex;
    for (unsigned long long i : {1ull, 7ull, 13ull, 35ull}) {
        const auto result = run("construct --i " + std::to_string(i) + " --format json");
        REQUIRE(result.exit_code == 0);
        const riccati::json parsed = riccati::json::parse(result.out);
        REQUIRE(riccati::rationalFunctionFromJson(parsed) == riccati::solution(AdmissibleIndex(i)));
    }
}

TEST_CASE("verify") {
    const auto ok = run("verify --i 13");
    REQUIRE(ok.exit_code == 0);
    REQUIRE(ok.out == "residual = 0\n");

    REQUIRE(run("verify --i 1").exit_code == 0);
    REQUIRE(run("verify --i 9").exit_code == 2);

    SECTION("mismatched lambda fails verification") {
        const auto bad = run("verify --i 7 --lambda 1/144");
        REQUIRE(bad.exit_code == 1);
        REQUIRE(bad.out.find("residual = 0") == std::string::npos);
        REQUIRE(bad.out.find("residual") != std::string::npos);
    }
}

TEST_CASE("verify-all") {
    const auto small = run("verify-all --max-i 25");
    REQUIRE(small.exit_code == 0);
    REQUIRE(small.out.find("9/9 indices up to 25") != std::string::npos);

    const auto single = run("verify-all --max-i 1");
    REQUIRE(single.exit_code == 0);
    REQUIRE(single.out.find("1/1 indices") != std::string::npos);

    SECTION("parallel run reports in index order") {
        const auto parallel = run("verify-all --max-i 49 --parallel");
        REQUIRE(parallel.exit_code == 0);
        std::size_t last = 0;
        for (unsigned long long i = 1; i <= 49; i += (i % 6 == 1) ? 4 : 2) {
            const std::size_t pos = parallel.out.find("i = " + std::to_string(i) + ":");
            REQUIRE(pos != std::string::npos);
            REQUIRE(pos >= last);
            last = pos;
        }
    }
}

TEST_CASE("enumerate") {
    const auto five = run("enumerate --k 5");
    REQUIRE(five.exit_code == 0);
    REQUIRE(five.out == "1 5 7 11 13\n");

    const auto json = run("enumerate --k 9 --format json");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out == "[1,5,7,11,13,17,19,23,25]\n");
}

TEST_CASE("eta") {
    const auto text = run("eta --max-exponent 200");
    REQUIRE(text.exit_code == 0);
    REQUIRE(text.out == "q - q^25 - q^49 + q^121 + q^169 + O(q^201)\n");

    const auto tiny = run("eta --max-exponent 1");
    REQUIRE(tiny.exit_code == 0);
    REQUIRE(tiny.out == "q + O(q^2)\n");

    const auto json = run("eta --max-exponent 300 --format json");
    REQUIRE(json.exit_code == 0);
    REQUIRE(json.out == "{\"1\":1,\"25\":-1,\"49\":-1,\"121\":1,\"169\":1,\"289\":-1}\n");

    REQUIRE(run("eta --max-exponent 0").exit_code == 2);
}

TEST_CASE("coefficient") {
    const auto pole = run("coefficient --lambda 1/144");
    REQUIRE(pole.exit_code == 0);
    REQUIRE(pole.out.find("zero-by-pole") != std::string::npos);

    const auto invalid = run("coefficient --lambda 25/144");
    REQUIRE(invalid.exit_code == 0);
    REQUIRE(invalid.out.find("formula-invalid") != std::string::npos);

    const auto value = run("coefficient --lambda 1/36");
    REQUIRE(value.exit_code == 0);
    REQUIRE(value.out.find("not rational") != std::string::npos);
    REQUIRE(value.out.find("0.79370052") != std::string::npos);

    REQUIRE(run("coefficient --lambda -1/4").exit_code == 2);
    REQUIRE(run("coefficient --lambda nonsense").exit_code == 2);
}

TEST_CASE("oracle-check") {
    REQUIRE(run("oracle-check --i 7 --x 1/864").exit_code == 0);
    REQUIRE(run("oracle-check --i 1 --x 1/1728").exit_code == 0);
    REQUIRE(run("oracle-check --i 13 --x 1/576").exit_code == 0);
    REQUIRE(run("oracle-check --i 7 --x 1/4").exit_code == 2);
    REQUIRE(run("oracle-check --i 7 --x 0").exit_code == 2);

    SECTION("NUMERIC_TOL overrides the default tolerance") {
        const auto result = run("oracle-check --i 13 --x 1/576 --tol 1e-6");
        REQUIRE(result.out.find("tol = 1e-06") != std::string::npos);
        const std::string command =
            "NUMERIC_TOL=1e-5 " + std::string(RICCATI_CLI_PATH) + " oracle-check --i 13 --x 1/576";
        FILE* pipe = popen((command + " 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buffer{};
        while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
            out.append(buffer.data(), n);
        pclose(pipe);
        REQUIRE(out.find("tol = 1e-05") != std::string::npos);
    }
}

TEST_CASE("admissible") {
    const auto yes = run("admissible --lambda 169/144");
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.out.find("13^2") != std::string::npos);

    REQUIRE(run("admissible --lambda 1/36").exit_code == 1);
    REQUIRE(run("admissible --lambda -1").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run("construct").exit_code == 2);
    REQUIRE(run("no-such-command").exit_code == 2);
}
