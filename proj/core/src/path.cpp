#include "rainbow/path.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

std::string_view to_string(SequenceDefect defect) {
    switch (defect) {
        case SequenceDefect::none: return "none";
        case SequenceDefect::empty: return "empty";
        case SequenceDefect::vertex_out_of_range: return "vertex out of range";
        case SequenceDefect::repeated_vertex: return "repeated vertex";
        case SequenceDefect::not_adjacent: return "not adjacent";
        case SequenceDefect::repeated_color: return "repeated color";
    }
    return "unknown";
}

SequenceDefect classify_sequence(const EdgeColoredGraph& g, std::span<const int> seq) {
    if (seq.empty()) return SequenceDefect::empty;

    const int n = g.vertex_count();
    for (int v : seq) {
        if (v < 0 || v >= n) return SequenceDefect::vertex_out_of_range;
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : seq) {
        if (seen[static_cast<std::size_t>(v)]) return SequenceDefect::repeated_vertex;
        seen[static_cast<std::size_t>(v)] = 1;
    }

    std::vector<char> used(static_cast<std::size_t>(g.color_count()), 0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const int c = g.edge_color(seq[i], seq[i + 1]);
        if (c < 0) return SequenceDefect::not_adjacent;
        if (used[static_cast<std::size_t>(c)]) return SequenceDefect::repeated_color;
        used[static_cast<std::size_t>(c)] = 1;
    }
    return SequenceDefect::none;
}

HeteroPath HeteroPath::from_sequence(const EdgeColoredGraph& g, std::vector<int> seq) {
    const SequenceDefect defect = classify_sequence(g, seq);
    if (defect != SequenceDefect::none)
        throw std::invalid_argument("not a heterochromatic path: " + std::string(to_string(defect)));

    ColorSet colors(g.color_count());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        colors.insert(g.edge_color(seq[i], seq[i + 1]));
    return HeteroPath(std::move(seq), std::move(colors));
}

HeteroPath HeteroPath::single(const EdgeColoredGraph& g, int v) {
    return from_sequence(g, {v});
}

std::vector<std::int64_t> edge_color_labels(const EdgeColoredGraph& g, const HeteroPath& path) {
    std::vector<std::int64_t> labels;
    const auto& seq = path.vertices();
    labels.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        labels.push_back(g.color_label(g.edge_color(seq[i], seq[i + 1])));
    return labels;
}

}  // namespace rainbow
