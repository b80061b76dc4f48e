#include "rainbow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rainbow {

EdgeColoredGraph::EdgeColoredGraph(int n, std::vector<ColoredEdge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("EdgeColoredGraph: negative vertex count");

    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::out_of_range("EdgeColoredGraph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("EdgeColoredGraph: self-loop");
        if (e.color < 0) throw std::invalid_argument("EdgeColoredGraph: negative color label");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("EdgeColoredGraph: parallel edge {" +
                                        std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + "}");
    }
    edges_ = std::move(edges);

    color_labels_.reserve(edges_.size());
    for (const auto& e : edges_) color_labels_.push_back(e.color);
    std::sort(color_labels_.begin(), color_labels_.end());
    color_labels_.erase(std::unique(color_labels_.begin(), color_labels_.end()),
                        color_labels_.end());

    auto dense_index = [this](std::int64_t label) {
        auto it = std::lower_bound(color_labels_.begin(), color_labels_.end(), label);
        return static_cast<int>(it - color_labels_.begin());
    };

    adj_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++adj_offsets_[static_cast<std::size_t>(e.u) + 1];
        ++adj_offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i) adj_offsets_[i] += adj_offsets_[i - 1];

    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : edges_) {
        const int c = dense_index(e.color);
        adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, c};
        adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, c};
    }
    for (int v = 0; v < n_; ++v) {
        auto begin = adjacency_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[static_cast<std::size_t>(v)]);
        auto end = adjacency_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
        std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

void EdgeColoredGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int EdgeColoredGraph::edge_color(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto list = neighbors(u);
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& a, int b) { return a.vertex < b; });
    if (it != list.end() && it->vertex == v) return it->color;
    return -1;
}

ColorSet color_neighborhood(const EdgeColoredGraph& g, int v) {
    ColorSet cn(g.color_count());
    for (const auto& nb : g.neighbors(v)) cn.insert(nb.color);
    return cn;
}

int color_degree(const EdgeColoredGraph& g, int v) {
    return color_neighborhood(g, v).size();
}

int cn_union(const EdgeColoredGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cn_union: vertices must be distinct");
    ColorSet cn = color_neighborhood(g, u);
    for (const auto& nb : g.neighbors(v)) cn.insert(nb.color);
    return cn.size();
}

GraphStats graph_stats(const EdgeColoredGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("graph_stats: empty graph");

    GraphStats stats;
    stats.c = g.color_count();

    std::vector<ColorSet> cns;
    cns.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cns.push_back(color_neighborhood(g, v));

    stats.k = cns[0].size();
    for (int v = 1; v < n; ++v) stats.k = std::min(stats.k, cns[static_cast<std::size_t>(v)].size());

    if (n >= 2) {
        int s = -1;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const int un = (cns[static_cast<std::size_t>(u)] | cns[static_cast<std::size_t>(v)]).size();
                if (s < 0 || un < s) s = un;
            }
        }
        stats.s = s;
    }
    return stats;
}

}  // namespace rainbow
