#include "rainbow/local_search.hpp"

#include <stdexcept>

namespace rainbow {

namespace {

// First successful extend at either end, tail before head, ascending v.
std::optional<HeteroPath> try_extend(const EdgeColoredGraph& g, const HeteroPath& path) {
    for (MoveKind kind : {MoveKind::tail_extend, MoveKind::head_extend}) {
        const int endpoint = kind == MoveKind::tail_extend ? path.tail() : path.head();
        for (const auto& nb : g.neighbors(endpoint)) {
            if (path.colors().contains(nb.color)) continue;
            if (auto next = apply_move(g, path, {kind, 0, nb.vertex})) return next;
        }
    }
    return std::nullopt;
}

}  // namespace

HeteroPath local_search(const EdgeColoredGraph& g, int start) {
    if (start < 0 || start >= g.vertex_count())
        throw std::out_of_range("local_search: start vertex out of range");

    HeteroPath path = HeteroPath::single(g, start);
    int plateau_left = 2 * g.vertex_count();

    for (;;) {
        while (auto extended = try_extend(g, path)) path = std::move(*extended);

        const auto moves = enumerate_moves(g, path);

        const MoveOutcome* gain = nullptr;
        const MoveOutcome* plateau = nullptr;
        for (const auto& outcome : moves) {
            if (outcome.resulting_length > path.length()) {
                gain = &outcome;
                break;
            }
            if (!plateau && outcome.resulting_length == path.length()) plateau = &outcome;
        }

        if (gain) {
            path = *apply_move(g, path, gain->move);
            plateau_left = 2 * g.vertex_count();
            continue;
        }
        if (plateau && plateau_left > 0) {
            path = *apply_move(g, path, plateau->move);
            --plateau_left;
            continue;  // an extend attempt runs next iteration
        }
        return path;
    }
}

HeteroPath best_local_search(const EdgeColoredGraph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("best_local_search: empty graph");
    HeteroPath best = local_search(g, 0);
    for (int start = 1; start < g.vertex_count(); ++start) {
        HeteroPath candidate = local_search(g, start);
        if (candidate.length() > best.length()) best = std::move(candidate);
    }
    return best;
}

}  // namespace rainbow
