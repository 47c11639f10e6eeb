#include "dirac.hpp"

#include <algorithm>

#include "connectivity.hpp"

namespace circ {

namespace {

// Non-extendable path: grow the back, then the front, always taking the
// lowest unused neighbor. Afterwards every neighbor of both endpoints
// lies on the path.
std::vector<int> maximal_path(const Graph& g) {
  std::vector<int> path{0};
  std::uint64_t used = bit(0);
  for (bool front : {false, true}) {
    while (true) {
      int tip = front ? path.front() : path.back();
      std::uint64_t ext = g.neighbors(tip) & ~used;
      if (!ext) break;
      int w = std::countr_zero(ext);
      used |= bit(w);
      if (front)
        path.insert(path.begin(), w);
      else
        path.push_back(w);
    }
  }
  return path;
}

// Best cycle recoverable from the path alone: the whole path when its
// ends are adjacent or a crossing exists, otherwise the longest of the
// two endpoint loops and the mixed prefix+suffix loops.
Cycle initial_cycle(const Graph& g, const std::vector<int>& path) {
  int l = static_cast<int>(path.size()) - 1;
  int u = path.front();
  int v = path.back();

  if (g.has_edge(u, v)) {
    Cycle c;
    c.vertices = path;
    return c;
  }
  for (int t = 0; t < l; ++t) {
    if (g.has_edge(v, path[static_cast<size_t>(t)]) &&
        g.has_edge(u, path[static_cast<size_t>(t + 1)])) {
      Cycle c;  // u..p_t, then v back down to p_{t+1}, wrap to u
      for (int i = 0; i <= t; ++i)
        c.vertices.push_back(path[static_cast<size_t>(i)]);
      for (int i = l; i > t; --i)
        c.vertices.push_back(path[static_cast<size_t>(i)]);
      return c;
    }
  }

  int best_from = 0, best_to = l, best_len = 0;
  auto consider = [&](int b, int a) {
    // cycle p_0..p_b joined to p_a..p_l via the edges v..p_b and u..p_a
    int len = (b + 1) + (l - a + 1);
    if (len > best_len) {
      best_len = len;
      best_from = b;
      best_to = a;
    }
  };
  int far_u = -1, near_v = -1;
  for (int t = 1; t <= l; ++t)
    if (g.has_edge(u, path[static_cast<size_t>(t)])) far_u = t;
  for (int t = l - 1; t >= 0; --t)
    if (g.has_edge(v, path[static_cast<size_t>(t)])) near_v = t;
  Cycle c;
  if (far_u >= 2) {  // endpoint loop at u
    c.vertices.assign(path.begin(), path.begin() + far_u + 1);
    best_len = far_u + 1;
    best_from = -1;
  }
  if (near_v >= 0 && l - near_v >= 2 && l - near_v + 1 > best_len) {
    c.vertices.assign(path.begin() + near_v, path.end());
    best_len = l - near_v + 1;
    best_from = -1;
  }
  for (int b = 0; b < l; ++b) {
    if (!g.has_edge(v, path[static_cast<size_t>(b)])) continue;
    for (int a = b + 1; a <= l; ++a)
      if (g.has_edge(u, path[static_cast<size_t>(a)])) {
        consider(b, a);
        break;  // smallest a past b maximizes the kept suffix
      }
  }
  if (best_from >= 0) {
    c.vertices.clear();
    for (int i = 0; i <= best_from; ++i)
      c.vertices.push_back(path[static_cast<size_t>(i)]);
    for (int i = l; i >= best_to; --i)
      c.vertices.push_back(path[static_cast<size_t>(i)]);
  }
  return c;
}

}  // namespace

Cycle dirac_cycle(const Graph& g, const EngineOptions& opts) {
  if (!is_two_connected(g))
    fail(Status::not_two_connected, "the degree bound needs 2-connectivity");

  Cycle c = initial_cycle(g, maximal_path(g));
  if (!c.validate(g))
    fail(Status::theorem_violation, "initial crossing cycle invalid");

  int target = std::min(g.order(), 2 * g.min_degree());
  EngineOptions pure = opts;
  pure.oracle_fallback = false;
  while (c.length() < target) {
    EngineOutcome step = engine_round(g, c, /*allow_structure=*/false, pure);
    if (!step.improved)
      fail(Status::theorem_violation, "improvement stalled below the bound");
    c = std::move(*step.improved);
  }
  return c;
}

}  // namespace circ
