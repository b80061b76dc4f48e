#include "rainbow/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::tail_extend: return "tail-extend";
        case MoveKind::head_extend: return "head-extend";
        case MoveKind::rotation: return "rotation";
        case MoveKind::detour: return "detour";
        case MoveKind::insertion: return "insertion";
        case MoveKind::cycle_rotation: return "cycle-rotation";
    }
    return "unknown";
}

std::string to_string(const Move& move) {
    std::string out = to_string(move.kind);
    switch (move.kind) {
        case MoveKind::tail_extend:
        case MoveKind::head_extend:
            out += "(v=" + std::to_string(move.v) + ")";
            break;
        case MoveKind::rotation:
        case MoveKind::insertion:
            out += "(x=" + std::to_string(move.x) + ")";
            break;
        case MoveKind::detour:
        case MoveKind::cycle_rotation:
            out += "(x=" + std::to_string(move.x) + ", v=" + std::to_string(move.v) + ")";
            break;
    }
    return out;
}

namespace {

void require_external(int v) {
    if (v < 0) throw std::invalid_argument("move needs an external vertex");
}

void require_pivot(int x, int lo, int hi) {
    if (x < lo || x > hi)
        throw std::out_of_range("move pivot x=" + std::to_string(x) + " outside " +
                                std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace

std::vector<int> candidate_sequence(std::span<const int> path, const Move& move) {
    if (path.empty()) throw std::invalid_argument("candidate_sequence: empty path");
    const int l = static_cast<int>(path.size()) - 1;  // edge count
    const auto at = [&](int i) { return path[static_cast<std::size_t>(i - 1)]; };  // 1-based

    std::vector<int> out;
    out.reserve(path.size() + 1);

    switch (move.kind) {
        case MoveKind::tail_extend:
            require_external(move.v);
            out.assign(path.begin(), path.end());
            out.push_back(move.v);
            return out;

        case MoveKind::head_extend:
            require_external(move.v);
            out.push_back(move.v);
            out.insert(out.end(), path.begin(), path.end());
            return out;

        case MoveKind::rotation:
            require_pivot(move.x, 2, l + 1);
            for (int i = move.x - 1; i >= 1; --i) out.push_back(at(i));
            for (int i = move.x; i <= l + 1; ++i) out.push_back(at(i));
            return out;

        case MoveKind::detour:
            require_external(move.v);
            require_pivot(move.x, 1, l - 1);
            for (int i = 1; i <= move.x; ++i) out.push_back(at(i));
            out.push_back(move.v);
            for (int i = move.x + 2; i <= l + 1; ++i) out.push_back(at(i));
            return out;

        case MoveKind::insertion:
            require_pivot(move.x, 2, l);
            for (int i = 2; i <= move.x; ++i) out.push_back(at(i));
            out.push_back(at(1));
            for (int i = move.x + 1; i <= l + 1; ++i) out.push_back(at(i));
            return out;

        case MoveKind::cycle_rotation:
            require_external(move.v);
            require_pivot(move.x, 2, l + 1);
            out.push_back(move.v);
            for (int i = move.x; i <= l + 1; ++i) out.push_back(at(i));
            for (int i = 1; i <= move.x - 1; ++i) out.push_back(at(i));
            return out;
    }
    throw std::invalid_argument("unknown move kind");
}

std::optional<HeteroPath> apply_move(const EdgeColoredGraph& g, const HeteroPath& path,
                                     const Move& move) {
    std::vector<int> candidate = candidate_sequence(path.vertices(), move);
    if (classify_sequence(g, candidate) != SequenceDefect::none) return std::nullopt;
    return HeteroPath::from_sequence(g, std::move(candidate));
}

std::vector<MoveOutcome> enumerate_moves(const EdgeColoredGraph& g, const HeteroPath& path) {
    const auto& seq = path.vertices();
    const int l = path.length();
    const int head = path.head();
    const int tail = path.tail();

    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : seq) on_path[static_cast<std::size_t>(v)] = 1;
    const auto external = [&](int v) { return !on_path[static_cast<std::size_t>(v)]; };

    std::vector<Move> candidates;

    for (const auto& nb : g.neighbors(tail)) {
        if (external(nb.vertex)) candidates.push_back({MoveKind::tail_extend, 0, nb.vertex});
    }
    for (const auto& nb : g.neighbors(head)) {
        if (external(nb.vertex)) candidates.push_back({MoveKind::head_extend, 0, nb.vertex});
    }

    // rotation: needs the chord from the head to u(x), x in 3..l
    for (int x = 3; x <= l; ++x) {
        if (g.has_edge(head, seq[static_cast<std::size_t>(x - 1)]))
            candidates.push_back({MoveKind::rotation, x, -1});
    }

    // detour: external v adjacent to both u(x) and u(x+2)
    for (int x = 1; x <= l - 1; ++x) {
        const int a = seq[static_cast<std::size_t>(x - 1)];
        const int b = seq[static_cast<std::size_t>(x + 1)];
        for (const auto& nb : g.neighbors(a)) {
            if (external(nb.vertex) && g.has_edge(nb.vertex, b))
                candidates.push_back({MoveKind::detour, x, nb.vertex});
        }
    }

    // insertion: the head re-enters between u(x) and u(x+1); both must be its
    // neighbors
    for (int x = 2; x <= l; ++x) {
        if (g.has_edge(head, seq[static_cast<std::size_t>(x - 1)]) &&
            g.has_edge(head, seq[static_cast<std::size_t>(x)]))
            candidates.push_back({MoveKind::insertion, x, -1});
    }

    // cycle_rotation: needs the tail-to-head chord, plus external v adjacent
    // to the cut vertex u(x)
    if (l >= 1 && g.has_edge(head, tail)) {
        for (int x = 2; x <= l + 1; ++x) {
            const int cut = seq[static_cast<std::size_t>(x - 1)];
            for (const auto& nb : g.neighbors(cut)) {
                if (external(nb.vertex))
                    candidates.push_back({MoveKind::cycle_rotation, x, nb.vertex});
            }
        }
    }

    std::sort(candidates.begin(), candidates.end());

    std::vector<MoveOutcome> out;
    for (const auto& move : candidates) {
        if (auto applied = apply_move(g, path, move))
            out.push_back({move, applied->length()});
    }
    return out;
}

}  // namespace rainbow
