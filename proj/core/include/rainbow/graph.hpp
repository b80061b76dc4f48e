#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/color_set.hpp"

namespace rainbow {

/// One edge as supplied by callers and files: endpoints plus the arbitrary
/// nonnegative color label. Labels carry no ordering semantics; only equality
/// matters.
struct ColoredEdge {
    int u = 0;
    int v = 0;
    std::int64_t color = 0;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple undirected graph with exactly one color per edge. Immutable after
/// construction, so it can be shared freely across concurrent searches.
///
/// Color labels are re-indexed densely at construction (ascending label order
/// maps to indices 0..color_count()-1); all algorithmic code works on the
/// dense indices, serialization restores the original labels.
class EdgeColoredGraph {
public:
    struct Neighbor {
        int vertex;
        int color;  // dense index
    };

    /// Throws std::invalid_argument on self-loops, parallel edges or negative
    /// colors, std::out_of_range on endpoints outside 0..n-1.
    EdgeColoredGraph(int n, std::vector<ColoredEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// c(G), the number of distinct colors.
    int color_count() const { return static_cast<int>(color_labels_.size()); }

    /// Original label for a dense color index.
    std::int64_t color_label(int index) const { return color_labels_.at(static_cast<std::size_t>(index)); }

    /// Edges normalized to u < v, sorted lexicographically, original labels.
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    /// Neighbors of v in ascending vertex order, with dense color indices.
    std::span<const Neighbor> neighbors(int v) const {
        check_vertex(v);
        return {adjacency_.data() + adj_offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + adj_offsets_[static_cast<std::size_t>(v) + 1]};
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const { return edge_color(u, v) >= 0; }

    /// Dense color index of edge {u,v}, or -1 when uv is not an edge.
    int edge_color(int u, int v) const;

    bool operator==(const EdgeColoredGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<ColoredEdge> edges_;
    std::vector<std::int64_t> color_labels_;   // dense index -> original label, ascending
    std::vector<Neighbor> adjacency_;          // concatenated per-vertex lists
    std::vector<std::size_t> adj_offsets_;     // n_+1 entries
};

/// CN(v): the set of colors on edges incident with v (dense indices).
ColorSet color_neighborhood(const EdgeColoredGraph& g, int v);

/// d^c(v) = |CN(v)|.
int color_degree(const EdgeColoredGraph& g, int v);

/// |CN(u) ∪ CN(v)| for distinct vertices u, v.
int cn_union(const EdgeColoredGraph& g, int u, int v);

struct GraphStats {
    int k = 0;              // min over vertices of color_degree
    std::optional<int> s;   // min over vertex pairs of cn_union; absent when n < 2
    int c = 0;              // distinct color count

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Aggregate hypothesis statistics. Throws std::invalid_argument on n = 0.
GraphStats graph_stats(const EdgeColoredGraph& g);

}  // namespace rainbow
