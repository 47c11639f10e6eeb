#include "family.hpp"

#include <random>

namespace circ {

Graph gen_join_family(int delta, int m, InnerPolicy inner,
                      std::uint64_t seed) {
  if (delta < 2 || m <= delta)
    fail(Status::bad_parameters,
         "join family needs delta >= 2 and m > delta");
  if (delta + m > Graph::kMaxOrder)
    fail(Status::too_large, "join family exceeds 62 vertices");
  Graph hub(delta);
  switch (inner) {
    case InnerPolicy::empty:
      break;
    case InnerPolicy::complete:
      hub = complete_graph(delta);
      break;
    case InnerPolicy::random: {
      std::mt19937_64 rng(seed);
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < delta; ++u)
        for (int v = u + 1; v < delta; ++v)
          if (rng() & 1u) edges.emplace_back(u, v);
      hub = Graph::from_edge_list(delta, edges);
      break;
    }
  }
  return join(hub, empty_graph(m));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  std::vector<std::uint64_t> rows(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = g.vertex_set() ^ bit(v);
  return Graph::from_adjacency(n, std::move(rows));
}

Graph cycle_graph(int n) {
  if (n < 3) fail(Status::bad_parameters, "cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
  return join(empty_graph(a), empty_graph(b));
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);              // spokes
  }
  return Graph::from_edge_list(10, edges);
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n)
    : LabeledGraphEnumerator(n, 0, total(n)) {}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, std::uint64_t begin,
                                               std::uint64_t end)
    : n_(n), next_code_(begin), end_(end) {
  if (n < 0 || n > 7)
    fail(Status::budget_exceeded,
         "labeled enumeration is budgeted for n <= 7");
  if (end > total(n) || begin > end)
    fail(Status::bad_parameters, "enumeration range out of bounds");
}

std::uint64_t LabeledGraphEnumerator::total(int n) {
  if (n < 0 || n > 7)
    fail(Status::budget_exceeded,
         "labeled enumeration is budgeted for n <= 7");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph LabeledGraphEnumerator::decode(int n, std::uint64_t edge_mask) {
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  int t = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++t) {
      if (edge_mask >> t & 1u) {
        rows[static_cast<size_t>(u)] |= bit(v);
        rows[static_cast<size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(n, std::move(rows));
}

bool LabeledGraphEnumerator::next(Graph& out) {
  if (next_code_ >= end_) return false;
  out = decode(n_, next_code_++);
  return true;
}

void for_each_labeled_graph(int n,
                            const std::function<bool(const Graph&)>& filter,
                            const std::function<void(const Graph&)>& fn) {
  LabeledGraphEnumerator en(n);
  Graph g;
  while (en.next(g))
    if (!filter || filter(g)) fn(g);
}

}  // namespace circ
