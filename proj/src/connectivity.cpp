#include "connectivity.hpp"

#include <algorithm>

namespace circ {

bool TwoFan::validate(const Graph& g, std::uint64_t target) const {
  if (apex < 0 || apex >= g.order()) return false;
  if (bit(apex) & target) return false;
  if (!q1.validate(g) || !q2.validate(g)) return false;
  if (q1.length() < 1 || q2.length() < 1) return false;
  if (q1.front() != apex || q2.front() != apex) return false;
  if (foot1() == foot2()) return false;
  // Each path meets the target exactly at its far endpoint.
  if ((q1.vertex_mask() & target) != bit(foot1())) return false;
  if ((q2.vertex_mask() & target) != bit(foot2())) return false;
  if ((q1.vertex_mask() & q2.vertex_mask()) != bit(apex)) return false;
  return true;
}

std::uint64_t reachable_from(const Graph& g, int start) {
  std::uint64_t seen = bit(start);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reachable_from(g, 0) == g.vertex_set();
}

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> order, low;
  std::uint64_t cuts = 0;
  int counter = 0;

  explicit LowLink(const Graph& g)
      : g(g),
        order(static_cast<size_t>(g.order()), -1),
        low(static_cast<size_t>(g.order()), -1) {}

  void dfs(int v, int parent) {
    order[v] = low[v] = counter++;
    int children = 0;
    for_each_bit(g.neighbors(v), [&](int w) {
      if (order[w] == -1) {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= order[v]) cuts |= bit(v);
      } else if (w != parent) {
        low[v] = std::min(low[v], order[w]);
      }
    });
    if (parent == -1 && children >= 2) cuts |= bit(v);
  }
};

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
  if (!is_connected(g))
    fail(Status::disconnected, "cut vertices need a connected graph");
  LowLink scan(g);
  scan.dfs(0, -1);
  std::vector<int> out;
  for_each_bit(scan.cuts, [&](int v) { out.push_back(v); });
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  LowLink scan(g);
  scan.dfs(0, -1);
  return scan.cuts == 0;
}

namespace {

// Unit-capacity flow network over split vertices (in = 2v, out = 2v+1)
// plus one supersink, so each target absorbs at most one unit and the
// two fan paths come out internally disjoint.
struct FanNetwork {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;
  std::vector<char> seen;

  explicit FanNetwork(int nodes) : arcs(static_cast<size_t>(nodes)) {}

  void add(int from, int to) {
    arcs[from].push_back({to, 1, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  bool augment(int v, int sink) {
    if (v == sink) return true;
    seen[v] = 1;
    for (Arc& a : arcs[v]) {
      if (a.cap == 0 || seen[a.to]) continue;
      if (augment(a.to, sink)) {
        --a.cap;
        ++arcs[a.to][a.rev].cap;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

TwoFan two_fan(const Graph& g, int source, std::uint64_t target) {
  if (source < 0 || source >= g.order())
    fail(Status::vertex_out_of_range, "fan source out of range");
  if (target & ~g.vertex_set())
    fail(Status::vertex_out_of_range, "fan target out of range");
  if (bit(source) & target)
    fail(Status::bad_parameters, "fan source inside target");
  if (std::popcount(target) < 2)
    fail(Status::bad_parameters, "fan target needs at least 2 vertices");

  int n = g.order();
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  int sink = 2 * n;
  FanNetwork net(2 * n + 1);

  for (int v = 0; v < n; ++v) {
    if (v == source) continue;
    if (bit(v) & target)
      net.add(in(v), sink);
    else
      net.add(in(v), out(v));
  }
  // Arcs in ascending vertex order keep augmentation deterministic.
  for (int v = 0; v < n; ++v) {
    for_each_bit(g.neighbors(v), [&](int w) {
      if (w != source) net.add(out(v), in(w));
    });
  }

  int flow = 0;
  for (int round = 0; round < 2; ++round) {
    net.seen.assign(net.arcs.size(), 0);
    if (net.augment(out(source), sink)) ++flow;
  }
  if (flow < 2)
    fail(Status::no_fan, "no width-2 fan; input cannot be 2-connected");

  TwoFan fan;
  fan.apex = source;
  for (Path* path : {&fan.q1, &fan.q2}) {
    path->vertices.push_back(source);
    int v = source;
    while (true) {
      // Follow one unit of flow out of v and consume it.
      FanNetwork::Arc* used = nullptr;
      for (auto& a : net.arcs[out(v)])
        if (a.cap == 0 && a.to != in(v) && (a.to & 1) == 0) {
          used = &a;
          break;
        }
      if (!used) fail(Status::no_fan, "flow decomposition failed");
      ++used->cap;
      v = used->to / 2;
      path->vertices.push_back(v);
      if (bit(v) & target) break;
    }
  }
  if (fan.q1.back() > fan.q2.back()) std::swap(fan.q1, fan.q2);
  return fan;
}

}  // namespace circ
