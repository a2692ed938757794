#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string command =
        std::string(PULSAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("pulsar_cli_test_" + std::to_string(getpid()) + "_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("pattern ascii for size 2") {
    const CmdResult result = run_cli("pattern 2");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "( )( )\n . ( )\n");
}

TEST_CASE("pattern json for size 5 has 15 circles") {
    const CmdResult result = run_cli("pattern 5 --format json");
    REQUIRE(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["n"] == 5);
    CHECK(!doc.contains("grid"));
    int circles = 0;
    for (const auto& row : doc["circled"]) {
        for (const auto& cell : row) {
            circles += cell.get<bool>() ? 1 : 0;
        }
    }
    CHECK(circles == 15);
}

TEST_CASE("pattern svg draws circles") {
    const CmdResult result = run_cli("pattern 3 --format svg");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("<svg") != std::string::npos);
    size_t circles = 0;
    for (size_t at = result.out.find("<circle"); at != std::string::npos;
         at = result.out.find("<circle", at + 1)) {
        ++circles;
    }
    CHECK(circles == 6);
}

TEST_CASE("pattern rejects bad sizes and formats") {
    CHECK(run_cli("pattern 0").exit_code == 2);
    CHECK(run_cli("pattern -4").exit_code == 2);
    CHECK(run_cli("pattern 5 --format txt").exit_code == 2);
}

TEST_CASE("seq outputs") {
    CHECK(run_cli("seq --terms 10").out == "1,2,1,3,2,1,4,2,3,1\n");
    CHECK(run_cli("seq --block 6").out == "6,2,4,3,5,1\n");
    CHECK(run_cli("seq --bfile 3").out == "1 1\n2 2\n3 1\n");
}

TEST_CASE("seq b-file is two ascending integer columns") {
    const CmdResult result = run_cli("seq --bfile 40");
    REQUIRE(result.exit_code == 0);
    std::istringstream lines(result.out);
    long long k, value;
    long long expected_k = 1;
    while (lines >> k >> value) {
        CHECK(k == expected_k);
        CHECK(value >= 1);
        ++expected_k;
    }
    CHECK(expected_k == 41);
}

TEST_CASE("seq requires exactly one mode") {
    CHECK(run_cli("seq").exit_code == 2);
    CHECK(run_cli("seq --terms 5 --block 3").exit_code == 2);
    CHECK(run_cli("seq --terms 0").exit_code == 2);
}

TEST_CASE("construct ascii for size 2") {
    const CmdResult result = run_cli("construct 2");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "(2)(1)\n 1 (2)\n");
}

TEST_CASE("construct methods agree byte for byte") {
    for (const std::string format : {"ascii", "json"}) {
        const CmdResult direct =
            run_cli("construct 5 --method direct --format " + format);
        const CmdResult recursive =
            run_cli("construct 5 --method recursive --format " + format);
        CHECK(direct.exit_code == 0);
        CHECK(recursive.exit_code == 0);
        CHECK(direct.out == recursive.out);
    }
}

TEST_CASE("construct then verify round trip") {
    for (int n = 1; n <= 32; ++n) {
        CAPTURE(n);
        const CmdResult doc =
            run_cli("construct " + std::to_string(n) + " --format json");
        REQUIRE(doc.exit_code == 0);
        const auto path = temp_file("roundtrip.json");
        write_file(path, doc.out);
        const CmdResult verified = run_cli("verify " + path.string());
        CHECK(verified.exit_code == 0);
        CHECK(verified.out.find("result: pass") != std::string::npos);
        std::filesystem::remove(path);
    }
}

TEST_CASE("verify flags a tampered grid") {
    const CmdResult doc = run_cli("construct 6 --format json");
    REQUIRE(doc.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(doc.out);
    std::swap(parsed["grid"][1][0], parsed["grid"][1][1]);
    const auto path = temp_file("tampered.json");
    write_file(path, parsed.dump(2));
    const CmdResult verified = run_cli("verify " + path.string());
    CHECK(verified.exit_code == 1);
    CHECK(verified.out.find("latin: FAIL") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("verify rejects malformed input") {
    const auto truncated = temp_file("truncated.json");
    write_file(truncated, "{\"n\": 3, \"circled\": [[true");
    CHECK(run_cli("verify " + truncated.string()).exit_code == 2);
    std::filesystem::remove(truncated);

    CHECK(run_cli("verify /nonexistent/pulsar.json").exit_code == 2);

    // Grid-free documents cannot be verified.
    const CmdResult pattern_doc = run_cli("pattern 4 --format json");
    const auto gridless = temp_file("gridless.json");
    write_file(gridless, pattern_doc.out);
    CHECK(run_cli("verify " + gridless.string()).exit_code == 2);
    std::filesystem::remove(gridless);

    // A circled layout that is not the spiral is rejected, not failed.
    nlohmann::json doc =
        nlohmann::json::parse(run_cli("construct 3 --format json").out);
    doc["circled"][2][0] = !doc["circled"][2][0].get<bool>();
    const auto offspiral = temp_file("offspiral.json");
    write_file(offspiral, doc.dump(2));
    CHECK(run_cli("verify " + offspiral.string()).exit_code == 2);
    std::filesystem::remove(offspiral);
}

TEST_CASE("check reports uniqueness for a range") {
    const CmdResult result = run_cli("check 2 4 --level L0");
    CHECK(result.exit_code == 0);
    size_t rows = 0;
    for (size_t at = result.out.find("unique, matches construction");
         at != std::string::npos;
         at = result.out.find("unique, matches construction", at + 1)) {
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(result.out.find("nodes") != std::string::npos);
}

TEST_CASE("check rejects a reversed range") {
    CHECK(run_cli("check 5 4").exit_code == 2);
}
