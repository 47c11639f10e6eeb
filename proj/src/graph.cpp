#include "graph.hpp"

namespace circ {

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::null_argument: return "null_argument";
    case Status::loop_edge: return "loop_edge";
    case Status::vertex_out_of_range: return "vertex_out_of_range";
    case Status::malformed_header: return "malformed_header";
    case Status::truncated_bits: return "truncated_bits";
    case Status::non_ascii_byte: return "non_ascii_byte";
    case Status::too_large: return "too_large";
    case Status::empty_graph: return "empty_graph";
    case Status::bad_parameters: return "bad_parameters";
    case Status::budget_exceeded: return "budget_exceeded";
    case Status::disconnected: return "disconnected";
    case Status::not_two_connected: return "not_two_connected";
    case Status::no_fan: return "no_fan";
    case Status::not_on_path: return "not_on_path";
    case Status::order_violation: return "order_violation";
    case Status::theorem_violation: return "theorem_violation";
    case Status::buffer_too_small: return "buffer_too_small";
  }
  return "unknown";
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    fail(Status::too_large, "graph order must be in [0, 62]");
  n_ = n;
  adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(Status::vertex_out_of_range,
         "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n_) +
             ")");
}

Graph Graph::from_edge_list(int n,
                            std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
      fail(Status::loop_edge, "loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::vector<std::uint64_t> rows) {
  if (n < 0 || n > kMaxOrder)
    fail(Status::too_large, "graph order must be in [0, 62]");
  if (static_cast<int>(rows.size()) != n)
    fail(Status::bad_parameters, "adjacency row count does not match order");
  Graph g(n);
  std::uint64_t universe = g.vertex_set();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~universe)
      fail(Status::vertex_out_of_range, "adjacency row exceeds vertex range");
    if (rows[v] >> v & 1u)
      fail(Status::loop_edge, "loop at vertex " + std::to_string(v));
  }
  for (int v = 0; v < n; ++v) {
    for_each_bit(rows[v], [&](int u) {
      if (!(rows[u] >> v & 1u))
        fail(Status::bad_parameters, "asymmetric adjacency rows");
    });
  }
  g.adj_ = std::move(rows);
  return g;
}

int Graph::min_degree() const {
  if (n_ == 0) fail(Status::empty_graph, "min degree of the empty graph");
  int best = kMaxOrder + 1;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > Graph::kMaxOrder) fail(Status::too_large, "join exceeds 62 vertices");
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  std::uint64_t left = g.order() == 0 ? 0 : (bit(g.order()) - 1);
  std::uint64_t right = left ^ (n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v) | right;
  for (int v = 0; v < h.order(); ++v)
    rows[static_cast<size_t>(g.order() + v)] =
        (h.neighbors(v) << g.order()) | left;
  return Graph::from_adjacency(n, std::move(rows));
}

}  // namespace circ
