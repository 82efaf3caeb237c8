#pragma once

#include <cstddef>
#include <vector>

#include "adabet/graph.hpp"

namespace adabet {

/// Normalized betweenness: sum over ordered pairs s != v != t of
/// sigma_st(v) / sigma_st, divided by n(n-1).
using ExactScores = std::vector<double>;

/// Brandes' algorithm: one BFS with path counting per source, then dependency
/// accumulation in order of decreasing distance.
ExactScores brandes(const Graph& graph, unsigned workers = 1);

inline constexpr std::size_t kBruteForceMaxNodes = 12;

/// Enumerates every shortest path of every ordered pair explicitly. Only for
/// tiny graphs; throws std::invalid_argument above kBruteForceMaxNodes nodes.
ExactScores brute_force_bc(const Graph& graph);

}  // namespace adabet
