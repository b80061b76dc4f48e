#include "rainbow/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rainbow/digest.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/local_search.hpp"
#include "rainbow/splitmix64.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::size_t kMinGapTrialCap = 32;

int env_thread_override() {
    const char* raw = std::getenv("RAINBOW_PATH_THREADS");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 4096)
        throw std::invalid_argument("RAINBOW_PATH_THREADS must be a positive integer");
    return static_cast<int>(value);
}

std::vector<GenSpec> build_stream(const SweepConfig& config) {
    if (!config.instances.empty()) return config.instances;

    SplitMix64 parent(config.base_seed);
    std::vector<GenSpec> specs;
    specs.reserve(config.trials);
    for (std::uint64_t i = 0; i < config.trials; ++i) {
        SplitMix64 t(parent.next());
        RandomColoredSpec spec{};
        spec.n = config.n_min +
                 static_cast<int>(t.next_below(static_cast<std::uint64_t>(config.n_max - config.n_min) + 1));
        spec.p = config.p_min + (config.p_max - config.p_min) * t.next_unit();
        spec.c = config.c_min +
                 static_cast<int>(t.next_below(static_cast<std::uint64_t>(config.c_max - config.c_min) + 1));
        spec.seed = t.next();
        specs.emplace_back(spec);
    }
    return specs;
}

}  // namespace

// Apparent violations are never taken at the fast solver's word: rerun the
// pruning-free enumerator when the instance is small enough.
ViolationCheck recheck_violation(const EdgeColoredGraph& g, const BoundReport& report) {
    ViolationCheck check;
    if (g.vertex_count() > 10) {
        check.genuine = true;  // too big to recheck; surface it for inspection
        return check;
    }
    const int truth = exhaustive_longest(g).length();
    check.solver_disagreed = truth != report.exact_length;
    const bool degree_violated = truth < report.degree_bound;
    const bool union_violated = report.union_bound && truth < *report.union_bound;
    check.genuine = degree_violated || union_violated;
    return check;
}

std::string SweepRecord::to_json() const {
    nlohmann::json j;
    j["trial"] = trial;
    j["spec"] = spec;
    j["digest"] = digest;
    j["report"] = nlohmann::json::parse(report.to_json());
    j["nodes"] = nodes;
    j["exact"] = exact;
    return j.dump();
}

SweepRecord run_instance(const EdgeColoredGraph& g, std::uint64_t oracle_budget,
                         std::uint64_t trial, std::string spec_label) {
    const auto start = Clock::now();

    SweepRecord record;
    record.trial = trial;
    record.spec = std::move(spec_label);
    record.digest = sha256_hex(serialize_ecg(g));

    const HeteroPath heuristic = best_local_search(g);
    OracleOptions options;
    options.node_budget = oracle_budget;
    const OracleResult result = longest_hetero_path(g, options);

    record.report = check_instance(g, result.path, heuristic);
    record.nodes = result.nodes;
    record.exact = result.exact;
    record.runtime_ms = ms_since(start);
    return record;
}

void SweepConfig::validate() const {
    if (instances.empty()) {
        if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
        if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sweep: bad n range");
        if (!(p_min >= 0.0 && p_max <= 1.0 && p_min <= p_max))
            throw std::invalid_argument("sweep: bad p range");
        if (c_min < 1 || c_max < c_min) throw std::invalid_argument("sweep: bad c range");
    }
    if (parallelism < 1) throw std::invalid_argument("sweep: parallelism must be >= 1");
    if (oracle_budget == 0) throw std::invalid_argument("sweep: oracle budget must be > 0");
}

std::string SweepSummary::to_json() const {
    nlohmann::json j;
    j["trials"] = trials;
    j["exact_records"] = exact_records;
    j["inexact_records"] = inexact_records;
    j["degree_violations"] = degree_violations;
    j["union_violations"] = union_violations;
    j["tight_records"] = tight_records;
    auto histogram = [](const std::map<int, std::uint64_t>& h) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& [gap, count] : h) out[std::to_string(gap)] = count;
        return out;
    };
    j["degree_gap_histogram"] = histogram(degree_gap_histogram);
    j["union_gap_histogram"] = histogram(union_gap_histogram);
    j["min_gap"] = min_gap;
    j["min_gap_trials"] = min_gap_trials;
    j["attainment_rate"] = attainment_rate;
    j["counterexample_found"] = counterexample_found;
    nlohmann::json files = nlohmann::json::array();
    for (const auto& path : counterexample_files) files.push_back(path.string());
    j["counterexample_files"] = files;
    j["solver_disagreements"] = solver_disagreements;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

SweepSummary sweep(const SweepConfig& config) {
    config.validate();
    const int env_threads = env_thread_override();
    const int workers = env_threads > 0 ? env_threads : config.parallelism;

    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("sweep: cannot open " + config.output_path.string() + " for writing");

    const auto started = Clock::now();
    const std::vector<GenSpec> specs = build_stream(config);

    SweepSummary summary;
    summary.trials = specs.size();

    std::uint64_t attained = 0;
    std::mutex sink_mutex;  // guards the output stream and the summary
    std::atomic<std::uint64_t> next_trial{0};
    std::atomic<bool> stop{false};

    auto consume = [&](std::uint64_t trial, const EdgeColoredGraph& g, const SweepRecord& record) {
        std::lock_guard lock(sink_mutex);
        out << record.to_json() << "\n";

        if (!record.exact) {
            ++summary.inexact_records;
            return;
        }
        ++summary.exact_records;
        const BoundReport& r = record.report;
        if (r.heuristic_length == r.exact_length) ++attained;
        if (r.tight) ++summary.tight_records;
        ++summary.degree_gap_histogram[r.exact_length - r.degree_bound];
        int max_bound = r.degree_bound;
        if (r.union_bound) {
            ++summary.union_gap_histogram[r.exact_length - *r.union_bound];
            max_bound = std::max(max_bound, *r.union_bound);
        }
        const int gap = r.exact_length - max_bound;
        if (summary.min_gap < 0 || gap < summary.min_gap) {
            summary.min_gap = gap;
            summary.min_gap_trials.clear();
        }
        if (gap == summary.min_gap && summary.min_gap_trials.size() < kMinGapTrialCap)
            summary.min_gap_trials.push_back(trial);

        if (!r.degree_ok || !r.union_ok) {
            const ViolationCheck check = recheck_violation(g, r);
            if (check.solver_disagreed) ++summary.solver_disagreements;
            if (check.genuine) {
                if (!r.degree_ok) ++summary.degree_violations;
                if (!r.union_ok) ++summary.union_violations;
                summary.counterexample_found = true;
                auto path = config.output_path;
                path += ".counterexample-" + std::to_string(trial) + ".ecg";
                std::vector<std::string> comments{record.spec, "digest " + record.digest};
                save_ecg(g, path, comments);
                summary.counterexample_files.push_back(path);
                stop.store(true);
            }
        }
    };

    auto worker = [&] {
        for (;;) {
            const std::uint64_t trial = next_trial.fetch_add(1);
            if (trial >= specs.size() || stop.load()) break;
            const EdgeColoredGraph g = generate(specs[trial]);
            const SweepRecord record =
                run_instance(g, config.oracle_budget, trial, describe(specs[trial]));
            consume(trial, g, record);
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    out.flush();
    if (!out) throw IoError("sweep: write failure on " + config.output_path.string());

    if (summary.exact_records > 0)
        summary.attainment_rate =
            static_cast<double>(attained) / static_cast<double>(summary.exact_records);
    summary.elapsed_ms = ms_since(started);
    return summary;
}

}  // namespace rainbow
