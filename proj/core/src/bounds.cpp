#include "rainbow/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace rainbow {

int degree_bound(int k) {
    if (k < 0) throw std::invalid_argument("degree_bound: negative k");
    if (k == 0) return 0;
    if (k <= 2) return (k + 2) / 2;          // ceil((k+1)/2)
    if (k <= 6) return k - 1;
    return (2 * k + 2) / 3 + 1;              // ceil(2k/3) + 1
}

int union_bound(int s) {
    if (s < 0) throw std::invalid_argument("union_bound: negative s");
    if (s <= 2) return s;
    if (s == 3) return 2;
    return std::max((2 * s + 4) / 5, (s + 2) / 3 + 1);
}

BoundReport check_instance(const EdgeColoredGraph& g, const HeteroPath& exact,
                           const HeteroPath& heuristic) {
    const GraphStats stats = graph_stats(g);

    BoundReport report;
    report.k = stats.k;
    report.s = stats.s;
    report.degree_bound = degree_bound(stats.k);
    if (stats.s) report.union_bound = union_bound(*stats.s);
    report.exact_length = exact.length();
    report.heuristic_length = heuristic.length();
    report.degree_ok = report.exact_length >= report.degree_bound;
    report.union_ok = !report.union_bound || report.exact_length >= *report.union_bound;

    int max_bound = report.degree_bound;
    if (report.union_bound) max_bound = std::max(max_bound, *report.union_bound);
    report.tight = report.exact_length == max_bound;
    return report;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["s"] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
    j["degree_bound"] = degree_bound;
    j["union_bound"] = union_bound ? nlohmann::json(*union_bound) : nlohmann::json(nullptr);
    j["exact_length"] = exact_length;
    j["heuristic_length"] = heuristic_length;
    j["degree_ok"] = degree_ok;
    j["union_ok"] = union_ok;
    j["tight"] = tight;
    return j.dump();
}

}  // namespace rainbow
