#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

/// One evaluated instance. The persisted JSON line carries trial, spec,
/// digest, report, nodes and exact; runtime_ms stays in memory (and in the
/// summary aggregates) so that record files are byte-reproducible.
struct SweepRecord {
    std::uint64_t trial = 0;
    std::string spec;      // CLI-style generator echo, or a file path
    std::string digest;    // lowercase hex SHA-256 of the serialized .ecg bytes
    BoundReport report;
    double runtime_ms = 0.0;
    std::uint64_t nodes = 0;
    bool exact = true;

    std::string to_json() const;
};

/// Oracle + heuristic + bound verdicts for one graph. The heuristic runs from
/// every start vertex and keeps the best result. Inexact oracle results
/// (budget exhausted) are recorded with exact = false; the contained report
/// then reflects the incumbent, not a verified optimum.
SweepRecord run_instance(const EdgeColoredGraph& g, std::uint64_t oracle_budget,
                         std::uint64_t trial = 0, std::string spec_label = {});

/// Outcome of re-verifying an apparent bound violation with the pruning-free
/// enumerator. solver_disagreed means the fast solver's length was wrong (a
/// solver bug, not a counterexample).
struct ViolationCheck {
    bool genuine = false;
    bool solver_disagreed = false;
};

/// Recomputes the exact length with exhaustive_longest (n <= 10) and
/// re-evaluates the report's bounds against it. Instances too large to
/// recheck are flagged genuine so they surface for manual inspection.
ViolationCheck recheck_violation(const EdgeColoredGraph& g, const BoundReport& report);

struct SweepConfig {
    std::uint64_t trials = 100;
    int n_min = 3;
    int n_max = 12;
    double p_min = 0.1;
    double p_max = 0.9;
    int c_min = 1;
    int c_max = 40;
    std::uint64_t base_seed = 0;
    int parallelism = 1;               // RAINBOW_PATH_THREADS overrides
    std::filesystem::path output_path = "sweep.jsonl";
    std::uint64_t oracle_budget = 100'000'000;

    /// When non-empty, sweep evaluates exactly these instances (trial i =
    /// instances[i]) instead of the random stream; trials is ignored.
    std::vector<GenSpec> instances;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct SweepSummary {
    std::uint64_t trials = 0;
    std::uint64_t exact_records = 0;
    std::uint64_t inexact_records = 0;
    std::uint64_t degree_violations = 0;   // verified counterexamples only
    std::uint64_t union_violations = 0;
    std::uint64_t tight_records = 0;

    /// Gap histograms over exact records: (exact_length - bound) -> count.
    std::map<int, std::uint64_t> degree_gap_histogram;
    std::map<int, std::uint64_t> union_gap_histogram;

    /// Trials attaining the minimum exact_length - max(applicable bounds).
    int min_gap = -1;
    std::vector<std::uint64_t> min_gap_trials;

    /// Fraction of exact records with heuristic_length == exact_length.
    double attainment_rate = 0.0;

    bool counterexample_found = false;
    std::vector<std::filesystem::path> counterexample_files;

    /// Apparent violations that the pruning-free recheck refuted; any nonzero
    /// value means the fast solver itself is broken.
    std::uint64_t solver_disagreements = 0;

    double elapsed_ms = 0.0;

    std::string to_json() const;
};

/// Runs the configured instance stream, appends one JSON line per record to
/// config.output_path, and accumulates the summary.
///
/// The stream derivation is pure SplitMix64: a parent generator seeded with
/// base_seed emits one sub-seed per trial (in trial order); trial i's
/// generator then draws n, p, c and the graph seed, in that order. Identical
/// configs therefore produce identical record files in single-threaded mode;
/// with parallelism > 1 records may interleave in any order but form the
/// same multiset.
///
/// Any bound violation is re-verified with exhaustive_longest (n <= 10)
/// before being reported; a verified counterexample stops the sweep, the
/// offending instance is serialized next to the output file, and
/// counterexample_found is set.
SweepSummary sweep(const SweepConfig& config);

}  // namespace rainbow
