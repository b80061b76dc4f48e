#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "rainbow/graph.hpp"

namespace rainbow {

/// All-distinct-colors complete graph: K_n with colors 0..n(n-1)/2-1 assigned
/// in lexicographic edge order. n >= 1.
EdgeColoredGraph rainbow_complete(int n);

/// The tight family for the color neighborhood union condition: for even s,
/// the complete graph on (s+4)/2 vertices with edge {0,1} deleted; for odd s,
/// the complete graph on (s+3)/2 vertices. All edges distinctly colored
/// 0..m-1 in lexicographic order. Its min pairwise CN union is exactly s and
/// its longest heterochromatic path has length floor(s/2)+1. s >= 1.
EdgeColoredGraph extremal_union(int s);

/// Seeded Erdős–Rényi instance: every pair {u,v}, visited in lexicographic
/// order, is kept with probability p (one unit draw), and each kept edge gets
/// one uniform color draw from 0..c-1. The SplitMix64 stream makes the result
/// a pure function of (n, p, c, seed), identical across platforms and runs.
/// Requires n >= 1, 0 <= p <= 1, c >= 1.
EdgeColoredGraph random_colored(int n, double p, int c, std::uint64_t seed);

struct RainbowCompleteSpec {
    int n;
    friend bool operator==(const RainbowCompleteSpec&, const RainbowCompleteSpec&) = default;
};
struct ExtremalUnionSpec {
    int s;
    friend bool operator==(const ExtremalUnionSpec&, const ExtremalUnionSpec&) = default;
};
struct RandomColoredSpec {
    int n;
    double p;
    int c;
    std::uint64_t seed;
    friend bool operator==(const RandomColoredSpec&, const RandomColoredSpec&) = default;
};

using GenSpec = std::variant<RainbowCompleteSpec, ExtremalUnionSpec, RandomColoredSpec>;

EdgeColoredGraph generate(const GenSpec& spec);

/// CLI-style echo, e.g. "random --n 9 --p 0.6 --c 14 --seed 7". Doubles are
/// printed with round-trip precision so the spec string regenerates the exact
/// instance.
std::string describe(const GenSpec& spec);

}  // namespace rainbow
