#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "paths.hpp"
#include "surgery.hpp"

namespace circ {

/// Everything the improvement engine learns around one cycle and one
/// longest attachment path: the path's off end, its anchor on the
/// cycle, the off end's other cycle neighbors in ring order, the arcs
/// between consecutive attachments, and each arc's first interior
/// vertex (its flank, -1 when the arc is a single edge).
///
/// segments[i] runs from attachments[i] to the next attachment for
/// i < k-1, segments[k-1] runs from the last attachment to the anchor,
/// and segments[k] runs from the anchor back to attachments[0].
struct AttachmentFrame {
  Path path;
  int off_end = -1;
  int anchor = -1;
  int dir = +1;  // ring direction the labeling walked
  std::vector<int> attachments;
  std::vector<Path> segments;
  std::vector<int> flank;

  int attachment_count() const { return static_cast<int>(attachments.size()); }
  bool validate(const Graph& g, const Cycle& c) const;
};

/// Builds the frame for walk direction dir (+1/-1). nullopt when the
/// off end has no cycle neighbor besides the anchor.
std::optional<AttachmentFrame> build_frame(const Graph& g, const Cycle& c,
                                           const Path& p, int dir);

struct EngineOptions {
  long long search_budget = 1 << 22;  // DFS nodes for attachment paths
  int max_paths = 128;                // longest paths tried per round
  bool oracle_fallback = true;        // consult the exact oracle when stuck
};

struct EngineOutcome {
  std::optional<Cycle> improved;
  std::optional<JoinCertificate> certificate;
  std::optional<AttachmentFrame> frame;  // witness for the certificate
  bool oracle_assisted = false;

  bool is_improved() const { return improved.has_value(); }
  bool is_structure() const { return certificate.has_value(); }
};

/// One round of the improve-or-structure cascade: fan insertion, the
/// consecutive-neighbor splice, then per longest attachment path the
/// fusion rule, segment swaps, splices, detours, and finally (only at
/// cycle length exactly 2*delta) the chord rewiring of a long path or
/// the extremal extraction. Throws theorem_violation when no rule
/// applies and no structure verifies.
EngineOutcome engine_round(const Graph& g, const Cycle& c,
                           bool allow_structure,
                           const EngineOptions& opts = {});

/// All longest paths with exactly one end on the cycle and every other
/// vertex off it, deterministic order, capped by opts.max_paths.
std::vector<Path> longest_attachment_paths(const Graph& g, const Cycle& c,
                                           const EngineOptions& opts = {});

}  // namespace circ
