#pragma once

#include <optional>

#include "graph.hpp"
#include "paths.hpp"

namespace circ {

enum class SurgeryFail {
  none,
  degenerate,       // nothing to do (spanning cycle, empty detour, ...)
  off_cycle,        // a vertex was on the wrong side of the cycle
  not_consecutive,  // feet are not a cycle edge
  not_adjacent,     // a required edge is missing
  hypothesis,       // the structural gate of the rule does not hold
  blocked,          // connecting path touches forbidden vertices
  no_gain,          // construction legal but not strictly longer
  invalid,          // assembled sequence failed cycle validation
};

const char* surgery_fail_name(SurgeryFail f);

/// Either a strictly longer valid cycle or the reason none was produced.
struct SurgeryOutcome {
  std::optional<Cycle> improved;
  SurgeryFail reason = SurgeryFail::none;

  bool applied() const { return improved.has_value(); }
  static SurgeryOutcome ok(Cycle c) { return {std::move(c), SurgeryFail::none}; }
  static SurgeryOutcome skip(SurgeryFail r) { return {std::nullopt, r}; }
};

/// Inserts an off-cycle vertex between two consecutive cycle vertices it
/// is adjacent to, gaining one vertex.
SurgeryOutcome splice_consecutive(const Graph& g, const Cycle& c, int z,
                                  int z1, int z2);

/// For an attachment path p = x..y (x off-cycle, y on c) whose off end
/// has no cycle neighbor besides y: reroutes p past the chord from x to
/// skip, leaves the cycle at link via the edge link..link_foot, and fuses
/// the rerouted path with the longer y..link_foot arc of c. Requires
/// that arc to carry at least min_degree(g) edges.
SurgeryOutcome arc_fusion(const Graph& g, const Cycle& c, const Path& p,
                          int link, int link_foot, int skip);

/// Same fusion with a connecting path instead of a single exit edge:
/// link runs from a vertex of p to a cycle vertex other than y, its
/// interior off both p and c. No arc-length gate; any strictly longer
/// valid result is accepted.
SurgeryOutcome fuse_with_link(const Graph& g, const Cycle& c, const Path& p,
                              const Path& link, int skip);

/// Replaces the two cycle edges into the flank vertices q.front()/q.back()
/// with the two-edge elbow through pivot plus the outside path q,
/// absorbing all of c, the pivot, and q's interior into one cycle.
SurgeryOutcome detour_cycle(const Graph& g, const Cycle& c, int pivot,
                            int attach_a, int attach_b, const Path& q);

/// Deletes the attachment-free arc between anchor and attach and routes
/// the cycle through the attachment path p plus the edge from p's off
/// end to attach; gains when the arc interior is smaller than p.
SurgeryOutcome segment_swap(const Graph& g, const Cycle& c, const Path& p,
                            int attach, int anchor);

}  // namespace circ
