#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace circ {

/// Open-ended sequence of distinct vertices, consecutive ones adjacent
/// in the host graph. May be empty (a slice can degenerate).
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  bool contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  std::uint64_t vertex_mask() const;
  Path reversed() const;
  bool validate(const Graph& g) const;
  bool operator==(const Path&) const = default;
};

/// Cyclic sequence of at least three distinct vertices; the wrap edge
/// counts too. length() is the number of vertices (= edges).
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  std::uint64_t vertex_mask() const;
  bool validate(const Graph& g) const;
  /// Rotates the smallest vertex to the front and fixes the direction so
  /// its smaller neighbor comes second. Purely representational.
  void canonicalize();
  bool operator==(const Cycle&) const = default;
};

enum class SliceBounds { closed, left_open, right_open, open };

/// Contiguous subsequence of p between the occurrences of vertices i and
/// j, with endpoints kept or dropped per bounds. i must not occur after j.
Path path_slice(const Path& p, int i, int j, SliceBounds bounds);

/// Witness that the graph is a join of an arbitrary hub graph with an
/// edgeless part that is strictly larger than the hub.
struct JoinCertificate {
  std::vector<int> hub;
  std::vector<int> independent;

  int hub_size() const { return static_cast<int>(hub.size()); }
  int independent_size() const { return static_cast<int>(independent.size()); }
  /// All four certificate conditions against g: the two sets partition
  /// the vertices, the independent part spans no edge, every cross pair
  /// is an edge, and the independent part outnumbers the hub.
  bool validate(const Graph& g) const;
  bool operator==(const JoinCertificate&) const = default;
};

}  // namespace circ
