#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rainbow/digest.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/sweep.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "rainbowpath-sweep-test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> sorted_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::sort(lines.begin(), lines.end());
    return lines;
}

// Rebuilds a graph from a record's "random --n .. --p .. --c .. --seed .."
// echo, the way a user would replay it through the CLI.
rainbow::EdgeColoredGraph regenerate(const std::string& spec) {
    std::istringstream in(spec);
    std::string kind;
    in >> kind;
    REQUIRE(kind == "random");
    int n = 0, c = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    for (std::string flag; in >> flag;) {
        if (flag == "--n") in >> n;
        else if (flag == "--p") in >> p;
        else if (flag == "--c") in >> c;
        else if (flag == "--seed") in >> seed;
    }
    return rainbow::random_colored(n, p, c, seed);
}

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value) setenv("RAINBOW_PATH_THREADS", value, 1);
    }
    ~EnvGuard() { unsetenv("RAINBOW_PATH_THREADS"); }
};

}  // namespace

TEST_CASE("run_instance on named instances") {
    const auto g10 = rainbow::extremal_union(10);  // rainbow K7 minus an edge
    const auto record = rainbow::run_instance(g10, 100'000'000, 3, "extremal --s 10");
    CHECK(record.exact);
    CHECK(record.trial == 3);
    CHECK(record.report.s == 10);
    CHECK(record.report.union_bound == 5);
    CHECK(record.report.exact_length == 6);
    CHECK(!record.report.tight);
    CHECK(record.report.k == 5);
    CHECK(record.report.degree_bound == 4);
    CHECK(record.digest == rainbow::sha256_hex(rainbow::serialize_ecg(g10)));
    CHECK(record.nodes > 0);

    const auto k3 = rainbow::run_instance(rainbow::rainbow_complete(3), 1'000'000);
    CHECK(k3.report.exact_length == 2);
    CHECK(k3.report.heuristic_length == 2);

    const auto mono = rainbow::run_instance(rainbow::random_colored(5, 1.0, 1, 1), 1'000'000);
    CHECK(mono.report.k == 1);
    CHECK(mono.report.exact_length == 1);
    CHECK(mono.report.degree_ok);
}

TEST_CASE("record json carries the persisted fields only") {
    const auto record = rainbow::run_instance(rainbow::rainbow_complete(4), 1'000'000, 9,
                                              "rainbow-k --n 4");
    const auto j = nlohmann::json::parse(record.to_json());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"digest", "exact", "nodes", "report", "spec", "trial"});
    CHECK(j["trial"] == 9);
    CHECK(j["spec"] == "rainbow-k --n 4");
    CHECK(j["report"]["exact_length"] == 3);
}

TEST_CASE("config validation") {
    rainbow::SweepConfig config;
    config.trials = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.trials = 5;
    config.n_min = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.n_min = 3;
    config.p_max = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.p_max = 0.9;
    config.parallelism = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.parallelism = 1;
    config.oracle_budget = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.oracle_budget = 1;
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("sweep output path must be writable up front") {
    rainbow::SweepConfig config;
    config.trials = 3;
    config.output_path = "/nonexistent-dir/records.jsonl";
    CHECK_THROWS_AS(rainbow::sweep(config), rainbow::IoError);
}

TEST_CASE("single-threaded sweeps are byte-reproducible") {
    const auto dir = scratch_dir();
    rainbow::SweepConfig config;
    config.trials = 40;
    config.n_min = 2;
    config.n_max = 8;
    config.base_seed = 1234;
    config.output_path = dir / "a.jsonl";

    const auto first = rainbow::sweep(config);
    CHECK(first.trials == 40);
    CHECK(first.exact_records == 40);
    CHECK(!first.counterexample_found);
    CHECK(first.degree_violations == 0);
    CHECK(first.union_violations == 0);
    CHECK(first.solver_disagreements == 0);

    config.output_path = dir / "b.jsonl";
    rainbow::sweep(config);
    CHECK(slurp(dir / "a.jsonl") == slurp(dir / "b.jsonl"));
    CHECK(sorted_lines(slurp(dir / "a.jsonl")).size() == 40);
}

TEST_CASE("parallel sweep yields the same record multiset") {
    const auto dir = scratch_dir();
    rainbow::SweepConfig config;
    config.trials = 30;
    config.n_min = 2;
    config.n_max = 8;
    config.base_seed = 77;
    config.output_path = dir / "serial.jsonl";
    rainbow::sweep(config);

    config.parallelism = 4;
    config.output_path = dir / "parallel.jsonl";
    rainbow::sweep(config);

    CHECK(sorted_lines(slurp(dir / "serial.jsonl")) ==
          sorted_lines(slurp(dir / "parallel.jsonl")));
}

TEST_CASE("RAINBOW_PATH_THREADS overrides the configured worker count") {
    const auto dir = scratch_dir();
    rainbow::SweepConfig config;
    config.trials = 12;
    config.n_min = 2;
    config.n_max = 7;
    config.base_seed = 5;
    config.output_path = dir / "env-a.jsonl";
    rainbow::sweep(config);

    {
        EnvGuard env("3");
        config.output_path = dir / "env-b.jsonl";
        rainbow::sweep(config);
    }
    CHECK(sorted_lines(slurp(dir / "env-a.jsonl")) == sorted_lines(slurp(dir / "env-b.jsonl")));

    {
        EnvGuard env("not-a-number");
        CHECK_THROWS_AS(rainbow::sweep(config), std::invalid_argument);
    }
}

TEST_CASE("explicit instance lists drive the sweep") {
    const auto dir = scratch_dir();
    rainbow::SweepConfig config;
    config.output_path = dir / "extremal.jsonl";
    for (int s = 4; s <= 12; ++s) config.instances.push_back(rainbow::ExtremalUnionSpec{s});

    const auto summary = rainbow::sweep(config);
    CHECK(summary.trials == 9);
    CHECK(summary.exact_records == 9);
    CHECK(summary.union_violations == 0);

    // every instance attains its own family length, and the union-bound gap
    // peaks at floor(s/2)+1 - union_bound(s) over the range
    int expected_max_gap = 0;
    for (int s = 4; s <= 12; ++s)
        expected_max_gap = std::max(expected_max_gap, s / 2 + 1 - rainbow::union_bound(s));

    std::istringstream in(slurp(config.output_path));
    int max_union_gap = 0;
    int line_count = 0;
    for (std::string line; std::getline(in, line); ++line_count) {
        const auto j = nlohmann::json::parse(line);
        const int s = j["report"]["s"].get<int>();
        CHECK(j["report"]["exact_length"].get<int>() == s / 2 + 1);
        max_union_gap = std::max(
            max_union_gap, j["report"]["exact_length"].get<int>() -
                               j["report"]["union_bound"].get<int>());
    }
    CHECK(line_count == 9);
    CHECK(max_union_gap == expected_max_gap);
    CHECK(summary.union_gap_histogram.rbegin()->first == expected_max_gap);
}

TEST_CASE("records round-trip through their spec echo") {
    const auto dir = scratch_dir();
    rainbow::SweepConfig config;
    config.trials = 10;
    config.n_min = 2;
    config.n_max = 8;
    config.base_seed = 99;
    config.output_path = dir / "roundtrip.jsonl";
    rainbow::sweep(config);

    std::istringstream in(slurp(config.output_path));
    for (std::string line; std::getline(in, line);) {
        const auto j = nlohmann::json::parse(line);
        const auto g = regenerate(j["spec"].get<std::string>());
        CHECK(rainbow::sha256_hex(rainbow::serialize_ecg(g)) == j["digest"].get<std::string>());

        const auto replay = rainbow::run_instance(g, 100'000'000, j["trial"].get<std::uint64_t>(),
                                                  j["spec"].get<std::string>());
        CHECK(nlohmann::json::parse(replay.report.to_json()) == j["report"]);
    }
}

TEST_CASE("violation recheck rejects doctored reports") {
    const auto g = rainbow::extremal_union(6);
    auto record = rainbow::run_instance(g, 1'000'000);
    REQUIRE(record.report.degree_ok);

    // understate the solver's answer: the recheck must catch the lie instead
    // of announcing a counterexample
    auto doctored = record.report;
    doctored.exact_length = 0;
    doctored.degree_ok = false;
    const auto check = rainbow::recheck_violation(g, doctored);
    CHECK(check.solver_disagreed);
    CHECK(!check.genuine);

    // instances too large to recheck surface as genuine for inspection
    auto big = record.report;
    big.degree_ok = false;
    const auto unverifiable = rainbow::recheck_violation(rainbow::rainbow_complete(11), big);
    CHECK(unverifiable.genuine);
}

TEST_CASE("digest is the sha256 of the canonical bytes") {
    // pinned vector so the hash implementation cannot drift silently
    CHECK(rainbow::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(rainbow::sha256_hex("ecg 2 1\n0 1 5\n") ==
          rainbow::sha256_hex(rainbow::serialize_ecg(rainbow::parse_ecg("ecg 2 1\n0 1 5"))));
}
