#include "paths.hpp"

namespace circ {

namespace {

bool all_distinct_in_range(const std::vector<int>& vs, int n,
                           std::uint64_t* mask_out) {
  std::uint64_t seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) return false;
    if (seen >> v & 1u) return false;
    seen |= bit(v);
  }
  if (mask_out) *mask_out = seen;
  return true;
}

}  // namespace

std::uint64_t Path::vertex_mask() const {
  std::uint64_t m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

Path Path::reversed() const {
  Path r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

bool Path::validate(const Graph& g) const {
  if (!all_distinct_in_range(vertices, g.order(), nullptr)) return false;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

std::uint64_t Cycle::vertex_mask() const {
  std::uint64_t m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

bool Cycle::validate(const Graph& g) const {
  if (vertices.size() < 3) return false;
  if (!all_distinct_in_range(vertices, g.order(), nullptr)) return false;
  for (size_t i = 0; i < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[(i + 1) % vertices.size()]))
      return false;
  return true;
}

void Cycle::canonicalize() {
  if (vertices.size() < 3) return;
  auto lowest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), lowest, vertices.end());
  if (vertices[1] > vertices.back())
    std::reverse(vertices.begin() + 1, vertices.end());
}

Path path_slice(const Path& p, int i, int j, SliceBounds bounds) {
  auto it_i = std::find(p.vertices.begin(), p.vertices.end(), i);
  auto it_j = std::find(p.vertices.begin(), p.vertices.end(), j);
  if (it_i == p.vertices.end() || it_j == p.vertices.end())
    fail(Status::not_on_path, "slice endpoint not on path");
  if (it_i > it_j)
    fail(Status::order_violation, "slice endpoints out of path order");
  if (bounds == SliceBounds::left_open || bounds == SliceBounds::open) ++it_i;
  if (bounds == SliceBounds::closed || bounds == SliceBounds::left_open)
    ++it_j;
  Path out;
  if (it_i < it_j) out.vertices.assign(it_i, it_j);
  return out;
}

bool JoinCertificate::validate(const Graph& g) const {
  std::uint64_t hub_mask = 0;
  std::uint64_t ind_mask = 0;
  if (!all_distinct_in_range(hub, g.order(), &hub_mask)) return false;
  if (!all_distinct_in_range(independent, g.order(), &ind_mask)) return false;
  if (hub_mask & ind_mask) return false;
  if ((hub_mask | ind_mask) != g.vertex_set()) return false;
  if (independent.size() <= hub.size()) return false;
  for (int v : independent) {
    if (g.neighbors(v) & ind_mask) return false;
    if ((g.neighbors(v) & hub_mask) != hub_mask) return false;
  }
  return true;
}

}  // namespace circ
