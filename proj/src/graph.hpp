#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circ {

enum class Status {
  ok = 0,
  null_argument,
  loop_edge,
  vertex_out_of_range,
  malformed_header,
  truncated_bits,
  non_ascii_byte,
  too_large,
  empty_graph,
  bad_parameters,
  budget_exceeded,
  disconnected,
  not_two_connected,
  no_fan,
  not_on_path,
  order_violation,
  theorem_violation,
  buffer_too_small,
};

/// Stable snake_case name for a status code ("loop_edge", ...).
const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Status code() const noexcept { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& what) {
  throw Error(code, what);
}

/// Simple undirected graph on vertices 0..n-1, immutable once built.
/// One 64-bit adjacency row per vertex caps the order at 62, the same
/// ceiling as the short graph6 form, and makes neighborhood
/// intersections single AND instructions.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  explicit Graph(int n);  // edgeless

  static Graph from_edge_list(int n,
                              std::span<const std::pair<int, int>> edges);
  /// Builds from raw adjacency rows; rejects asymmetric or reflexive rows.
  static Graph from_adjacency(int n, std::vector<std::uint64_t> rows);

  int order() const noexcept { return n_; }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u] >> v & 1u;
  }
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
  }
  int min_degree() const;
  int edge_count() const;
  std::uint64_t vertex_set() const {
    return n_ == 0 ? 0 : ~std::uint64_t{0} >> (64 - n_);
  }
  const std::vector<std::uint64_t>& rows() const { return adj_; }
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Disjoint union of g and h plus every edge between the two sides.
/// Vertices of g keep their ids, vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

/// Iterates set bits low to high.
template <typename Fn>
inline void for_each_bit(std::uint64_t mask, Fn&& fn) {
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    fn(v);
  }
}

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace circ
