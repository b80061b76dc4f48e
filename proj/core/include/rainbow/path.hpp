#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Why a vertex sequence fails to be a heterochromatic path.
enum class SequenceDefect {
    none = 0,
    empty,
    vertex_out_of_range,
    repeated_vertex,
    not_adjacent,
    repeated_color,
};

std::string_view to_string(SequenceDefect defect);

/// Full validity check: distinct in-range vertices, consecutive adjacency,
/// pairwise-distinct edge colors. A single vertex is a valid length-0 path.
SequenceDefect classify_sequence(const EdgeColoredGraph& g, std::span<const int> seq);

inline bool is_heterochromatic(const EdgeColoredGraph& g, std::span<const int> seq) {
    return classify_sequence(g, seq) == SequenceDefect::none;
}

/// A heterochromatic path: distinct vertices, consecutive edges pairwise
/// distinct in color. Instances are only built through from_sequence, which
/// validates against the graph, so a HeteroPath is valid by construction.
class HeteroPath {
public:
    /// Throws std::invalid_argument (message names the defect) unless seq is
    /// a heterochromatic path in g.
    static HeteroPath from_sequence(const EdgeColoredGraph& g, std::vector<int> seq);

    /// Length-0 path at v.
    static HeteroPath single(const EdgeColoredGraph& g, int v);

    const std::vector<int>& vertices() const { return vertices_; }
    const ColorSet& colors() const { return colors_; }

    /// Edge count; one less than the vertex count.
    int length() const { return static_cast<int>(vertices_.size()) - 1; }

    int head() const { return vertices_.front(); }
    int tail() const { return vertices_.back(); }

    bool operator==(const HeteroPath&) const = default;

private:
    HeteroPath(std::vector<int> vertices, ColorSet colors)
        : vertices_(std::move(vertices)), colors_(std::move(colors)) {}

    std::vector<int> vertices_;
    ColorSet colors_;
};

/// Original color labels of the path's consecutive edges, in path order.
std::vector<std::int64_t> edge_color_labels(const EdgeColoredGraph& g, const HeteroPath& path);

}  // namespace rainbow
