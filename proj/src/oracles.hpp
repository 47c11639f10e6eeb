#pragma once

#include <optional>

#include "graph.hpp"
#include "paths.hpp"

namespace circ {

inline constexpr int kLongestCycleBudget = 14;
inline constexpr int kHamiltonBudget = 16;

/// Maximum-length cycle by per-anchor subset DP (anchor = smallest
/// vertex of the cycle). nullopt when the graph is a forest.
/// Budgeted to n <= 14.
std::optional<Cycle> longest_cycle_exact(const Graph& g);

/// Hamilton cycle by Held-Karp over subsets containing vertex 0, or
/// nullopt when none exists. Budgeted to n <= 16.
std::optional<Cycle> hamilton_cycle_exact(const Graph& g);

}  // namespace circ
