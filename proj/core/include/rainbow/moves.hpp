#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/path.hpp"

namespace rainbow {

/// The six rearrangement templates the extender searches over. Positions are
/// 1-based along the current path u1..u(l+1), l = edge count.
enum class MoveKind : std::uint8_t {
    tail_extend = 0,     // append external v:              u1..u(l+1) v
    head_extend = 1,     // prepend external v:             v u1..u(l+1)
    rotation = 2,        // reverse the prefix before x:    u(x-1)..u1 ux..u(l+1)
    detour = 3,          // replace u(x+1) by external v:   u1..ux v u(x+2)..u(l+1)
    insertion = 4,       // move u1 after position x:       u2..ux u1 u(x+1)..u(l+1)
    cycle_rotation = 5,  // close tail-to-head, cut at x:   v ux..u(l+1) u1..u(x-1)
};

std::string to_string(MoveKind kind);

/// A parameterized template instance. `x` is the 1-based pivot for rotation,
/// detour, insertion and cycle_rotation; `v` the external vertex for the
/// extends, detour and cycle_rotation. Unused parameters stay at their
/// defaults.
///
/// Applying any move changes path length by 0 (rotation, detour, insertion)
/// or +1 (tail_extend, head_extend, cycle_rotation), never -1.
struct Move {
    MoveKind kind = MoveKind::tail_extend;
    int x = 0;
    int v = -1;

    friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& move);

/// Builds the rearranged vertex sequence purely combinatorially, without
/// touching the graph. Throws std::out_of_range / std::invalid_argument when
/// the parameters do not fit the sequence:
///   rotation:        2 <= x <= l+1
///   detour:          1 <= x <= l-1
///   insertion:       2 <= x <= l
///   cycle_rotation:  2 <= x <= l+1, v >= 0
///   tail/head:       v >= 0
std::vector<int> candidate_sequence(std::span<const int> path, const Move& move);

/// Guarded application: returns the new path when the candidate sequence is
/// heterochromatic in g, std::nullopt otherwise. Malformed parameters throw
/// as in candidate_sequence.
std::optional<HeteroPath> apply_move(const EdgeColoredGraph& g, const HeteroPath& path,
                                     const Move& move);

struct MoveOutcome {
    Move move;
    int resulting_length;

    friend bool operator==(const MoveOutcome&, const MoveOutcome&) = default;
};

/// Every parameterization of the six templates whose application succeeds,
/// ordered by (kind, x, v). Candidate generation is restricted to parameters
/// with the required chords/edges present, which prunes only certain
/// rejections, so the result is exactly the set of applicable moves.
std::vector<MoveOutcome> enumerate_moves(const EdgeColoredGraph& g, const HeteroPath& path);

}  // namespace rainbow
