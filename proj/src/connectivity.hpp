#pragma once

#include <vector>

#include "graph.hpp"
#include "paths.hpp"

namespace circ {

/// Two paths leaving one apex vertex and hitting a target set at two
/// distinct feet, sharing nothing but the apex and touching the target
/// only at the feet.
struct TwoFan {
  int apex = -1;
  Path q1;
  Path q2;

  int foot1() const { return q1.back(); }
  int foot2() const { return q2.back(); }
  bool validate(const Graph& g, std::uint64_t target) const;
};

/// Component containing start, as a bitmask.
std::uint64_t reachable_from(const Graph& g, int start);

bool is_connected(const Graph& g);

/// Articulation vertices, ascending. Input must be connected.
std::vector<int> cut_vertices(const Graph& g);

/// n >= 3, connected, and no articulation vertex.
bool is_two_connected(const Graph& g);

/// Width-2 fan from source into target, built from two rounds of
/// unit-vertex-capacity augmentation (lowest-numbered vertex first, so
/// the result is deterministic). Requires source outside target and
/// |target| >= 2; existence is guaranteed on 2-connected inputs.
TwoFan two_fan(const Graph& g, int source, std::uint64_t target);

}  // namespace circ
