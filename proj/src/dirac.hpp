#pragma once

#include "engine.hpp"

namespace circ {

/// Cycle of length at least min(n, 2*min_degree) in a 2-connected
/// graph, found constructively: a non-extendable path is closed through
/// the crossing pattern of its endpoints' neighborhoods, then the
/// improvement cascade runs until the bound is met. The exact oracles
/// are never consulted.
Cycle dirac_cycle(const Graph& g, const EngineOptions& opts = {});

}  // namespace circ
