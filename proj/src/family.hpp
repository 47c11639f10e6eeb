#pragma once

#include <cstdint>
#include <functional>

#include "graph.hpp"

namespace circ {

enum class InnerPolicy { empty, complete, random };

/// Hub graph on vertices 0..delta-1 (edges per policy, seeded for
/// random) joined with an edgeless part on delta..delta+m-1. Requires
/// delta >= 2 and m > delta, which makes the result 2-connected with
/// minimum degree exactly delta.
Graph gen_join_family(int delta, int m, InnerPolicy inner,
                      std::uint64_t seed = 0);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Streams every labeled simple graph on n vertices (n <= 7), each
/// exactly once, as edge masks over the graph6 upper-triangle order.
class LabeledGraphEnumerator {
 public:
  explicit LabeledGraphEnumerator(int n);
  LabeledGraphEnumerator(int n, std::uint64_t begin, std::uint64_t end);

  static std::uint64_t total(int n);
  static Graph decode(int n, std::uint64_t edge_mask);

  bool next(Graph& out);

 private:
  int n_;
  std::uint64_t next_code_;
  std::uint64_t end_;
};

/// Convenience wrapper: applies fn to every labeled graph passing the
/// filter (pass nullptr to keep all).
void for_each_labeled_graph(int n,
                            const std::function<bool(const Graph&)>& filter,
                            const std::function<void(const Graph&)>& fn);

}  // namespace circ
