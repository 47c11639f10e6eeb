#include "surgery.hpp"

#include <algorithm>

namespace circ {

const char* surgery_fail_name(SurgeryFail f) {
  switch (f) {
    case SurgeryFail::none: return "none";
    case SurgeryFail::degenerate: return "degenerate";
    case SurgeryFail::off_cycle: return "off_cycle";
    case SurgeryFail::not_consecutive: return "not_consecutive";
    case SurgeryFail::not_adjacent: return "not_adjacent";
    case SurgeryFail::hypothesis: return "hypothesis";
    case SurgeryFail::blocked: return "blocked";
    case SurgeryFail::no_gain: return "no_gain";
    case SurgeryFail::invalid: return "invalid";
  }
  return "unknown";
}

namespace {

struct Ring {
  const std::vector<int>& vs;

  int size() const { return static_cast<int>(vs.size()); }
  int at(int i) const {
    int n = size();
    return vs[static_cast<size_t>(((i % n) + n) % n)];
  }
  int position(int v) const {
    auto it = std::find(vs.begin(), vs.end(), v);
    return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
  }
  // Inclusive walk from one position to another in direction dir.
  std::vector<int> walk(int from_pos, int to_pos, int dir) const {
    std::vector<int> out{vs[static_cast<size_t>(from_pos)]};
    int target = vs[static_cast<size_t>(to_pos)];
    for (int i = from_pos; out.back() != target;) {
      i += dir;
      out.push_back(at(i));
    }
    return out;
  }
  // Vertices strictly between the two positions walking in dir.
  std::vector<int> between(int from_pos, int to_pos, int dir) const {
    std::vector<int> out = walk(from_pos, to_pos, dir);
    out.erase(out.begin());
    if (!out.empty()) out.pop_back();
    return out;
  }
};

SurgeryOutcome finish(const Graph& g, const Cycle& input, Cycle result) {
  if (!result.validate(g)) return SurgeryOutcome::skip(SurgeryFail::invalid);
  if (result.length() <= input.length())
    return SurgeryOutcome::skip(SurgeryFail::no_gain);
  return SurgeryOutcome::ok(std::move(result));
}

}  // namespace

SurgeryOutcome splice_consecutive(const Graph& g, const Cycle& c, int z,
                                  int z1, int z2) {
  if (c.length() == g.order())
    return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (c.contains(z)) return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (z1 < 0 || z1 >= g.order() || z2 < 0 || z2 >= g.order() || z1 == z2)
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (!g.has_edge(z, z1) || !g.has_edge(z, z2))
    return SurgeryOutcome::skip(SurgeryFail::not_adjacent);
  Ring ring{c.vertices};
  int p1 = ring.position(z1);
  if (p1 < 0 || ring.position(z2) < 0)
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (ring.at(p1 + 1) != z2 && ring.at(p1 - 1) != z2)
    return SurgeryOutcome::skip(SurgeryFail::not_consecutive);

  Cycle out = c;
  auto it = out.vertices.begin() + p1;
  if (ring.at(p1 + 1) == z2)
    out.vertices.insert(it + 1, z);
  else
    out.vertices.insert(it, z);
  return finish(g, c, std::move(out));
}

SurgeryOutcome fuse_with_link(const Graph& g, const Cycle& c, const Path& p,
                              const Path& link, int skip) {
  if (c.length() == g.order())
    return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (p.length() < 1 || !p.validate(g))
    return SurgeryOutcome::skip(SurgeryFail::invalid);
  if (link.length() < 1 || !link.validate(g))
    return SurgeryOutcome::skip(SurgeryFail::invalid);
  int x = p.front();
  int y = p.back();
  std::uint64_t cycle_mask = c.vertex_mask();
  if ((p.vertex_mask() & cycle_mask) != bit(y) || (bit(x) & cycle_mask))
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  // Gate: the off end may touch the cycle only at y.
  if (g.neighbors(x) & cycle_mask & ~bit(y))
    return SurgeryOutcome::skip(SurgeryFail::hypothesis);
  int exit = link.front();
  int foot = link.back();
  if (foot == y || !(bit(foot) & cycle_mask))
    return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (!g.has_edge(x, skip))
    return SurgeryOutcome::skip(SurgeryFail::not_adjacent);
  // Link interior stays off both the path and the cycle.
  std::uint64_t link_interior =
      link.vertex_mask() & ~bit(exit) & ~bit(foot);
  if (link_interior & (p.vertex_mask() | cycle_mask))
    return SurgeryOutcome::skip(SurgeryFail::blocked);

  auto pos_of = [&](int v) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    return it == p.vertices.end() ? -1
                                  : static_cast<int>(it - p.vertices.begin());
  };
  int exit_pos = pos_of(exit);
  int skip_pos = pos_of(skip);
  if (exit_pos < 0 || skip_pos < 0 || exit_pos >= skip_pos)
    return SurgeryOutcome::skip(SurgeryFail::blocked);

  // Rerouted path: foot ..link back.. exit ..p back.. x, chord to skip,
  // ..p on.. y. Everything of p survives except p(exit, skip).
  std::vector<int> fused;
  for (auto it = link.vertices.rbegin(); it != link.vertices.rend(); ++it)
    fused.push_back(*it);
  for (int i = exit_pos - 1; i >= 0; --i)
    fused.push_back(p.vertices[static_cast<size_t>(i)]);
  for (size_t i = static_cast<size_t>(skip_pos); i < p.vertices.size(); ++i)
    fused.push_back(p.vertices[i]);

  // Close with the longer of the two y..foot arcs of c.
  Ring ring{c.vertices};
  int from = ring.position(y);
  int to = ring.position(foot);
  std::vector<int> fwd = ring.between(from, to, +1);
  std::vector<int> bwd = ring.between(from, to, -1);
  const std::vector<int>& arc = fwd.size() >= bwd.size() ? fwd : bwd;

  Cycle out;
  out.vertices = std::move(fused);
  for (int v : arc) out.vertices.push_back(v);
  return finish(g, c, std::move(out));
}

SurgeryOutcome arc_fusion(const Graph& g, const Cycle& c, const Path& p,
                          int link, int link_foot, int skip) {
  if (link < 0 || link >= g.order() || link_foot < 0 ||
      link_foot >= g.order() || !g.has_edge(link, link_foot))
    return SurgeryOutcome::skip(SurgeryFail::not_adjacent);
  // The fused cycle must absorb an arc of at least min_degree edges.
  Ring ring{c.vertices};
  int from = ring.position(p.empty() ? -1 : p.back());
  int to = ring.position(link_foot);
  if (from >= 0 && to >= 0 && from != to) {
    int longer = std::max(
        static_cast<int>(ring.between(from, to, +1).size()),
        static_cast<int>(ring.between(from, to, -1).size()));
    if (longer + 1 < g.min_degree())
      return SurgeryOutcome::skip(SurgeryFail::hypothesis);
  }
  Path step;
  step.vertices = {link, link_foot};
  return fuse_with_link(g, c, p, step, skip);
}

SurgeryOutcome detour_cycle(const Graph& g, const Cycle& c, int pivot,
                            int attach_a, int attach_b, const Path& q) {
  if (c.length() == g.order())
    return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (c.contains(pivot)) return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (q.length() < 1) return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (!g.has_edge(pivot, attach_a) || !g.has_edge(pivot, attach_b))
    return SurgeryOutcome::skip(SurgeryFail::not_adjacent);
  if (!q.validate(g)) return SurgeryOutcome::skip(SurgeryFail::invalid);

  int flank_a = q.front();
  int flank_b = q.back();
  std::uint64_t cycle_mask = c.vertex_mask();
  std::uint64_t q_interior = q.vertex_mask() & ~bit(flank_a) & ~bit(flank_b);
  if (q_interior & (cycle_mask | bit(pivot)))
    return SurgeryOutcome::skip(SurgeryFail::blocked);

  Ring ring{c.vertices};
  int pa = ring.position(attach_a);
  int pb = ring.position(attach_b);
  if (pa < 0 || pb < 0 || attach_a == attach_b)
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (ring.position(flank_a) < 0 || ring.position(flank_b) < 0)
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  // flank_a must sit next to attach_a; the walk direction follows it.
  int dir;
  if (ring.at(pa + 1) == flank_a)
    dir = +1;
  else if (ring.at(pa - 1) == flank_a)
    dir = -1;
  else
    return SurgeryOutcome::skip(SurgeryFail::hypothesis);
  if (ring.at(pb + dir) != flank_b)
    return SurgeryOutcome::skip(SurgeryFail::hypothesis);

  // Drop the cycle edges attach_a..flank_a and attach_b..flank_b, then
  // stitch: flank_a ..arc.. attach_b, pivot, attach_a ..arc.. flank_b,
  // and q backwards from flank_b to flank_a.
  Cycle out;
  out.vertices = ring.walk(ring.position(flank_a), pb, dir);
  out.vertices.push_back(pivot);
  std::vector<int> back = ring.walk(pa, ring.position(flank_b), -dir);
  out.vertices.insert(out.vertices.end(), back.begin(), back.end());
  for (auto it = q.vertices.rbegin() + 1; it + 1 != q.vertices.rend(); ++it)
    out.vertices.push_back(*it);
  return finish(g, c, std::move(out));
}

SurgeryOutcome segment_swap(const Graph& g, const Cycle& c, const Path& p,
                            int attach, int anchor) {
  if (c.length() == g.order())
    return SurgeryOutcome::skip(SurgeryFail::degenerate);
  if (p.length() < 1 || !p.validate(g))
    return SurgeryOutcome::skip(SurgeryFail::invalid);
  int x = p.front();
  if (p.back() != anchor) return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  std::uint64_t cycle_mask = c.vertex_mask();
  if ((p.vertex_mask() & cycle_mask) != bit(anchor) || (bit(x) & cycle_mask))
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  if (!g.has_edge(x, attach))
    return SurgeryOutcome::skip(SurgeryFail::not_adjacent);

  Ring ring{c.vertices};
  int py = ring.position(anchor);
  int pt = ring.position(attach);
  if (py < 0 || pt < 0 || attach == anchor)
    return SurgeryOutcome::skip(SurgeryFail::off_cycle);
  std::uint64_t attachments = g.neighbors(x) & cycle_mask & ~bit(anchor);

  SurgeryFail last = SurgeryFail::hypothesis;
  for (int dir : {+1, -1}) {
    std::vector<int> interior = ring.between(py, pt, dir);
    bool clean = true;
    for (int v : interior)
      if (bit(v) & attachments) clean = false;
    if (!clean) continue;  // only the attachment-free arc may be swapped out
    if (static_cast<int>(interior.size()) >= p.length()) {
      last = SurgeryFail::no_gain;
      continue;
    }
    // anchor ..reversed p.. x, then the kept arc attach ..back to anchor.
    Cycle out;
    for (auto it = p.vertices.rbegin(); it != p.vertices.rend(); ++it)
      out.vertices.push_back(*it);
    std::vector<int> kept = ring.walk(pt, py, dir);
    out.vertices.insert(out.vertices.end(), kept.begin(), kept.end() - 1);
    SurgeryOutcome res = finish(g, c, std::move(out));
    if (res.applied()) return res;
    last = res.reason;
  }
  return SurgeryOutcome::skip(last);
}

}  // namespace circ
