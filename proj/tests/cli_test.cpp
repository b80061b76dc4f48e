#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rainbow/ecg_io.hpp"
#include "rainbow/generators.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const fs::path& scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "rainbowpath-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args) {
    const char* cli = std::getenv("RAINBOWPATH_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "RAINBOWPATH_CLI must point at the built binary");

    const fs::path out = scratch() / "stdout.txt";
    const fs::path err = scratch() / "stderr.txt";
    const std::string command =
        std::string(cli) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(command.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

}  // namespace

TEST_CASE("gen writes a parseable instance with its spec echoed") {
    const auto r = run_cli("gen rainbow-k --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 22) == "# gen rainbow-k --n 5\n");
    CHECK(rainbow::parse_ecg(r.out) == rainbow::rainbow_complete(5));

    const fs::path file = scratch() / "g4.ecg";
    const auto w = run_cli("gen extremal --s 4 -o " + file.string());
    CHECK(w.exit_code == 0);
    CHECK(rainbow::load_ecg(file) == rainbow::extremal_union(4));
}

TEST_CASE("verify reports the tight instance and exits cleanly") {
    const fs::path file = scratch() / "verify-g4.ecg";
    REQUIRE(run_cli("gen extremal --s 4 -o " + file.string()).exit_code == 0);

    const auto r = run_cli("verify " + file.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["union_ok"] == true);
    CHECK(j["union_bound"] == 3);
    CHECK(j["exact_length"] == 3);
    CHECK(j["tight"] == true);
}

TEST_CASE("solve prints the path and the color sequence") {
    const fs::path file = scratch() / "solve-k4.ecg";
    REQUIRE(run_cli("gen rainbow-k --n 4 -o " + file.string()).exit_code == 0);

    const auto r = run_cli("solve " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 7) == "length ");
    CHECK(r.out.find("length 3: 0 1 2 3\n") == 0);
    CHECK(r.out.find("colors:") != std::string::npos);
    CHECK(r.out.find("exact: true") != std::string::npos);

    const auto e = run_cli("extend " + file.string() + " --start 2");
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("length 3:") == 0);
}

TEST_CASE("stats emits the aggregate statistics") {
    const fs::path file = scratch() / "stats-g8.ecg";
    REQUIRE(run_cli("gen extremal --s 8 -o " + file.string()).exit_code == 0);

    const auto r = run_cli("stats " + file.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 6);
    CHECK(j["m"] == 14);
    CHECK(j["k"] == 4);
    CHECK(j["s"] == 8);
    CHECK(j["c"] == 14);
}

TEST_CASE("exit codes follow the table") {
    // usage errors
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("solve").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);

    // parse / io errors
    const fs::path bad = scratch() / "bad.ecg";
    std::ofstream(bad) << "ecg 2 1\n0 1 1\n0 1 2\n";
    const auto parse = run_cli("solve " + bad.string());
    CHECK(parse.exit_code == 3);
    CHECK(parse.err.find("line") != std::string::npos);
    CHECK(run_cli("solve " + (scratch() / "missing.ecg").string()).exit_code == 3);

    // out-of-range start vertex is a usage error
    const fs::path file = scratch() / "exit-k3.ecg";
    REQUIRE(run_cli("gen rainbow-k --n 3 -o " + file.string()).exit_code == 0);
    CHECK(run_cli("extend " + file.string() + " --start 9").exit_code == 1);
}

TEST_CASE("repeated sweeps from one seed produce identical files") {
    const fs::path a = scratch() / "sweep-a.jsonl";
    const fs::path b = scratch() / "sweep-b.jsonl";
    const std::string flags = "sweep --trials 100 --n-max 9 --seed 1 --out ";
    CHECK(run_cli(flags + a.string()).exit_code == 0);
    CHECK(run_cli(flags + b.string()).exit_code == 0);
    const auto bytes = slurp(a);
    CHECK(!bytes.empty());
    CHECK(bytes == slurp(b));
}
