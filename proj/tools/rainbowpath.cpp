// rainbowpath: generate, solve, extend and verify edge-colored graph
// instances for longest-heterochromatic-path experiments.
//
// Exit codes: 0 success, 1 usage error, 2 verified bound-violation
// counterexample, 3 I/O or parse error, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/local_search.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

void emit_graph(const rainbow::EdgeColoredGraph& g, const rainbow::GenSpec& spec,
                const std::string& output) {
    const std::vector<std::string> comments{"gen " + rainbow::describe(spec)};
    if (output.empty() || output == "-") {
        std::cout << rainbow::serialize_ecg(g, comments);
        return;
    }
    rainbow::save_ecg(g, output, comments);
}

void print_path(const rainbow::EdgeColoredGraph& g, const rainbow::HeteroPath& path) {
    std::cout << "length " << path.length() << ":";
    for (int v : path.vertices()) std::cout << " " << v;
    std::cout << "\ncolors:";
    for (auto label : rainbow::edge_color_labels(g, path)) std::cout << " " << label;
    std::cout << "\n";
}

int cmd_solve(const std::string& file, std::uint64_t budget, int threads, bool dominance) {
    const auto g = rainbow::load_ecg(file);
    rainbow::OracleOptions options;
    options.node_budget = budget;
    options.threads = threads;
    options.dominance = dominance;
    const auto result = rainbow::longest_hetero_path(g, options);
    print_path(g, result.path);
    std::cout << "nodes: " << result.nodes << " exact: " << (result.exact ? "true" : "false")
              << "\n";
    return kExitOk;
}

int cmd_extend(const std::string& file, std::optional<int> start) {
    const auto g = rainbow::load_ecg(file);
    const auto path =
        start ? rainbow::local_search(g, *start) : rainbow::best_local_search(g);
    print_path(g, path);
    return kExitOk;
}

int cmd_verify(const std::string& file, std::uint64_t budget) {
    const auto g = rainbow::load_ecg(file);
    const auto record = rainbow::run_instance(g, budget, 0, file);
    if (!record.exact) {
        std::cerr << "oracle budget exhausted; rerun with a larger --budget\n";
        return kExitUsage;
    }
    std::cout << record.report.to_json() << "\n";
    if (!record.report.degree_ok || !record.report.union_ok) {
        const auto check = rainbow::recheck_violation(g, record.report);
        if (check.solver_disagreed) {
            std::cerr << "internal error: exhaustive recheck disagrees with the solver\n";
            return kExitInternal;
        }
        if (check.genuine) {
            std::cerr << "bound violation confirmed by exhaustive recheck\n";
            return kExitCounterexample;
        }
    }
    return kExitOk;
}

int cmd_stats(const std::string& file) {
    const auto g = rainbow::load_ecg(file);
    const auto stats = rainbow::graph_stats(g);
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["k"] = stats.k;
    j["s"] = stats.s ? nlohmann::json(*stats.s) : nlohmann::json(nullptr);
    j["c"] = stats.c;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_sweep(const rainbow::SweepConfig& config) {
    const auto summary = rainbow::sweep(config);
    std::cout << summary.to_json() << "\n";
    if (summary.solver_disagreements > 0) {
        std::cerr << "internal error: exhaustive recheck disagreed with the solver\n";
        return kExitInternal;
    }
    if (summary.counterexample_found) {
        std::cerr << "bound violation: counterexample instance serialized\n";
        return kExitCounterexample;
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"edge-colored graph toolkit: exact and heuristic longest "
                 "heterochromatic paths, bound verification, instance sweeps"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an .ecg instance");
    gen->require_subcommand(1);
    std::string gen_output = "-";

    auto* gen_rainbow = gen->add_subcommand("rainbow-k", "complete graph, all colors distinct");
    int rk_n = 5;
    gen_rainbow->add_option("--n", rk_n, "vertex count")->required();
    gen_rainbow->add_option("-o,--output", gen_output, "output file ('-' for stdout)");
    gen_rainbow->callback([&] {
        const rainbow::GenSpec spec = rainbow::RainbowCompleteSpec{rk_n};
        emit_graph(rainbow::generate(spec), spec, gen_output);
    });

    auto* gen_extremal = gen->add_subcommand(
        "extremal", "tight instance for the neighborhood-union bound");
    int ex_s = 4;
    gen_extremal->add_option("--s", ex_s, "target min pairwise CN union")->required();
    gen_extremal->add_option("-o,--output", gen_output, "output file ('-' for stdout)");
    gen_extremal->callback([&] {
        const rainbow::GenSpec spec = rainbow::ExtremalUnionSpec{ex_s};
        emit_graph(rainbow::generate(spec), spec, gen_output);
    });

    auto* gen_random = gen->add_subcommand("random", "seeded Erdős–Rényi instance");
    int rnd_n = 8;
    double rnd_p = 0.5;
    int rnd_c = 8;
    std::uint64_t rnd_seed = 0;
    gen_random->add_option("--n", rnd_n, "vertex count")->required();
    gen_random->add_option("--p", rnd_p, "edge probability")->required();
    gen_random->add_option("--c", rnd_c, "color count")->required();
    gen_random->add_option("--seed", rnd_seed, "SplitMix64 seed")->required();
    gen_random->add_option("-o,--output", gen_output, "output file ('-' for stdout)");
    gen_random->callback([&] {
        const rainbow::GenSpec spec = rainbow::RandomColoredSpec{rnd_n, rnd_p, rnd_c, rnd_seed};
        emit_graph(rainbow::generate(spec), spec, gen_output);
    });

    // solve
    auto* solve = app.add_subcommand("solve", "exact longest heterochromatic path");
    std::string solve_file;
    std::uint64_t solve_budget = 100'000'000;
    int solve_threads = 1;
    bool solve_dominance = false;
    solve->add_option("file", solve_file, ".ecg input")->required();
    solve->add_option("--budget", solve_budget, "search node budget");
    solve->add_option("--threads", solve_threads, "root-level search threads");
    solve->add_flag("--dominance", solve_dominance, "enable the dominance memo");
    solve->callback([&] { exit_code = cmd_solve(solve_file, solve_budget, solve_threads,
                                                solve_dominance); });

    // extend
    auto* extend = app.add_subcommand("extend", "heuristic path via local search");
    std::string extend_file;
    int extend_start = -1;
    extend->add_option("file", extend_file, ".ecg input")->required();
    auto* start_opt = extend->add_option("--start", extend_start, "start vertex (default: best over all)");
    extend->callback([&] {
        exit_code = cmd_extend(extend_file, start_opt->count() ? std::optional<int>(extend_start)
                                                               : std::nullopt);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "bound report for one instance");
    std::string verify_file;
    std::uint64_t verify_budget = 100'000'000;
    verify->add_option("file", verify_file, ".ecg input")->required();
    verify->add_option("--budget", verify_budget, "search node budget");
    verify->callback([&] { exit_code = cmd_verify(verify_file, verify_budget); });

    // stats
    auto* stats = app.add_subcommand("stats", "graph statistics (k, s, c)");
    std::string stats_file;
    stats->add_option("file", stats_file, ".ecg input")->required();
    stats->callback([&] { exit_code = cmd_stats(stats_file); });

    // sweep
    auto* sw = app.add_subcommand("sweep", "randomized verification sweep");
    rainbow::SweepConfig config;
    sw->add_option("--trials", config.trials, "instance count");
    sw->add_option("--n-min", config.n_min, "min vertex count");
    sw->add_option("--n-max", config.n_max, "max vertex count");
    sw->add_option("--p-min", config.p_min, "min edge probability");
    sw->add_option("--p-max", config.p_max, "max edge probability");
    sw->add_option("--c-min", config.c_min, "min color count");
    sw->add_option("--c-max", config.c_max, "max color count");
    sw->add_option("--seed", config.base_seed, "base seed for the instance stream");
    sw->add_option("--threads", config.parallelism,
                   "worker threads (RAINBOW_PATH_THREADS overrides)");
    sw->add_option("--out", config.output_path, "records file (JSON lines)");
    sw->add_option("--budget", config.oracle_budget, "per-instance search node budget");
    sw->callback([&] { exit_code = cmd_sweep(config); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rainbow::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const rainbow::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
