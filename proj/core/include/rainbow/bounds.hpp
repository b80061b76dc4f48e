#pragma once

#include <optional>
#include <string>

#include "rainbow/graph.hpp"
#include "rainbow/path.hpp"

namespace rainbow {

/// Guaranteed heterochromatic-path length under the color degree condition
/// d^c(v) >= k for every vertex. Piecewise maximum of the known bounds:
///   k = 0        -> 0
///   k in {1, 2}  -> ceil((k+1)/2)
///   3 <= k <= 6  -> k - 1
///   k >= 7       -> ceil(2k/3) + 1     (the pieces agree at k = 7: 6)
int degree_bound(int k);

/// Guaranteed length under the color neighborhood union condition
/// |CN(u) ∪ CN(v)| >= s for every vertex pair:
///   s = 0        -> 0
///   s in {1, 2}  -> s
///   s = 3        -> 2
///   s >= 4       -> max(floor((2s+4)/5), ceil(s/3) + 1)
/// Both s >= 4 formulas are proven bounds, so their maximum is sound.
int union_bound(int s);

/// Per-instance verdict: measured hypotheses, applicable bounds, exact and
/// heuristic lengths. degree_ok false on any instance would be a genuine
/// counterexample to the degree bound (likewise union_ok).
struct BoundReport {
    int k = 0;
    std::optional<int> s;            // absent when n < 2
    int degree_bound = 0;
    std::optional<int> union_bound;  // absent when s is
    int exact_length = 0;
    int heuristic_length = 0;
    bool degree_ok = false;
    bool union_ok = false;           // vacuously true when union_bound absent
    bool tight = false;              // exact_length == max applicable bound

    /// Flat JSON object, snake_case keys, null for absent optionals.
    std::string to_json() const;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Assembles the report. `exact` must be an oracle-verified optimum;
/// `heuristic` any valid path in g (usually the local-search result).
BoundReport check_instance(const EdgeColoredGraph& g, const HeteroPath& exact,
                           const HeteroPath& heuristic);

}  // namespace rainbow
