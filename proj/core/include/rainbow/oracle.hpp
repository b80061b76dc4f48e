#pragma once

#include <cstdint>

#include "rainbow/path.hpp"

namespace rainbow {

struct OracleOptions {
    /// Search-tree node limit; exceeding it yields an inexact result.
    std::uint64_t node_budget = 100'000'000;

    /// Root subtrees (one per start vertex) searched concurrently when > 1.
    /// The returned path is identical in both modes; node/prune counts are
    /// only reproducible with threads == 1.
    int threads = 1;

    /// Optional (current, visited)-keyed dominance memo over used-color
    /// subsets. Off by default; only engaged in single-threaded mode when the
    /// graph fits (n <= 64, color_count <= dominance_width <= 64).
    bool dominance = false;
    int dominance_width = 64;
};

struct OracleResult {
    HeteroPath path;
    std::uint64_t nodes = 0;
    bool exact = true;
    std::uint64_t bound_prunes = 0;
    std::uint64_t dominance_prunes = 0;
};

/// Exact longest heterochromatic path by depth-first branch and bound over
/// (current vertex, visited set, used colors), from every start vertex.
///
/// A branch is cut when its length plus min(unvisited vertices, unused
/// colors) cannot beat the incumbent. When the search completes within
/// budget the result is optimal and its witness is the lexicographically
/// smallest optimal vertex sequence; on budget exhaustion the incumbent is
/// returned with exact = false (still a valid path).
///
/// Throws std::invalid_argument on an empty graph or a zero budget.
OracleResult longest_hetero_path(const EdgeColoredGraph& g, const OracleOptions& options = {});

/// Pruning-free cross-check: enumerates every simple path and filters with
/// is_heterochromatic, keeping the first-found (= lexicographically smallest)
/// maximum. Refuses graphs with more than 10 vertices.
HeteroPath exhaustive_longest(const EdgeColoredGraph& g);

}  // namespace rainbow
