#include "rainbow/generators.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rainbow/splitmix64.hpp"

namespace rainbow {

namespace {

EdgeColoredGraph rainbow_clique_minus(int n, bool drop_first_edge) {
    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    std::int64_t color = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (drop_first_edge && u == 0 && v == 1) continue;
            edges.push_back({u, v, color++});
        }
    }
    return EdgeColoredGraph(n, std::move(edges));
}

}  // namespace

EdgeColoredGraph rainbow_complete(int n) {
    if (n < 1) throw std::invalid_argument("rainbow_complete: n must be >= 1");
    return rainbow_clique_minus(n, false);
}

EdgeColoredGraph extremal_union(int s) {
    if (s < 1) throw std::invalid_argument("extremal_union: s must be >= 1");
    if (s % 2 == 0) return rainbow_clique_minus((s + 4) / 2, true);
    return rainbow_clique_minus((s + 3) / 2, false);
}

EdgeColoredGraph random_colored(int n, double p, int c, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_colored: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_colored: p must be in [0, 1]");
    if (c < 1) throw std::invalid_argument("random_colored: c must be >= 1");

    SplitMix64 rng(seed);
    std::vector<ColoredEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_unit() >= p) continue;
            const auto color = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(c)));
            edges.push_back({u, v, color});
        }
    }
    return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph generate(const GenSpec& spec) {
    return std::visit(
        [](const auto& s) -> EdgeColoredGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RainbowCompleteSpec>) return rainbow_complete(s.n);
            else if constexpr (std::is_same_v<T, ExtremalUnionSpec>) return extremal_union(s.s);
            else return random_colored(s.n, s.p, s.c, s.seed);
        },
        spec);
}

namespace {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace

std::string describe(const GenSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, RainbowCompleteSpec>) {
                return "rainbow-k --n " + std::to_string(s.n);
            } else if constexpr (std::is_same_v<T, ExtremalUnionSpec>) {
                return "extremal --s " + std::to_string(s.s);
            } else {
                return "random --n " + std::to_string(s.n) + " --p " + format_double(s.p) +
                       " --c " + std::to_string(s.c) + " --seed " + std::to_string(s.seed);
            }
        },
        spec);
}

}  // namespace rainbow
