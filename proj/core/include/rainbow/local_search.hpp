#pragma once

#include "rainbow/moves.hpp"

namespace rainbow {

/// Deterministic greedy extender over the move catalog.
///
/// Starting from the length-0 path at `start`, repeatedly: extend greedily at
/// both ends until maximal, then take the first length-increasing move from
/// enumerate_moves, falling back to the first length-preserving move (each
/// such move is immediately followed by another extend attempt). At most
/// 2 * n length-preserving moves are taken without a length gain before the
/// search stops. Path length never decreases during the run, and the result
/// is a valid heterochromatic path, fully determined by (g, start).
HeteroPath local_search(const EdgeColoredGraph& g, int start);

/// local_search from every start vertex, best result kept (ties: first start).
HeteroPath best_local_search(const EdgeColoredGraph& g);

}  // namespace rainbow
