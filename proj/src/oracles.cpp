#include "oracles.hpp"

#include <vector>

namespace circ {

namespace {

// Walks dp backwards from (mask, last) to the anchor, emitting the path
// anchor..last. dp[mask] holds the reachable endpoints of simple paths
// from the anchor with vertex set exactly mask.
std::vector<int> backtrack(const Graph& g, const std::vector<std::uint32_t>& dp,
                           std::uint64_t mask, int last, int anchor) {
  std::vector<int> rev;
  while (last != anchor) {
    rev.push_back(last);
    std::uint64_t prev_mask = mask & ~bit(last);
    std::uint64_t options =
        dp[prev_mask] & g.neighbors(last) & prev_mask;
    int prev = std::countr_zero(options);
    mask = prev_mask;
    last = prev;
  }
  rev.push_back(anchor);
  std::vector<int> out(rev.rbegin(), rev.rend());
  return out;
}

}  // namespace

std::optional<Cycle> longest_cycle_exact(const Graph& g) {
  int n = g.order();
  if (n > kLongestCycleBudget)
    fail(Status::budget_exceeded, "longest cycle DP is budgeted for n <= 14");
  if (n < 3) return std::nullopt;

  int best_len = 0;
  int best_anchor = -1, best_last = -1;
  std::uint64_t best_mask = 0;
  std::vector<std::uint32_t> dp;
  std::vector<std::uint32_t> best_dp;

  for (int anchor = 0; anchor + 2 < n; ++anchor) {
    if (n - anchor <= best_len) break;  // too few vertices left to improve
    std::uint64_t avail = g.vertex_set() & ~(bit(anchor) - 1);
    std::uint64_t space = std::uint64_t{1} << n;
    dp.assign(static_cast<size_t>(space), 0);
    dp[bit(anchor)] = static_cast<std::uint32_t>(bit(anchor));
    for (std::uint64_t mask = bit(anchor); mask < space; ++mask) {
      if (!(mask & bit(anchor)) || (mask & ~avail)) continue;
      std::uint32_t ends = dp[mask];
      if (!ends) continue;
      int size = std::popcount(mask);
      // Close a cycle through the anchor.
      if (size >= 3 && size > best_len &&
          (ends & ~bit(anchor) & g.neighbors(anchor))) {
        std::uint32_t closers = ends & ~bit(anchor) &
                                static_cast<std::uint32_t>(g.neighbors(anchor));
        best_len = size;
        best_anchor = anchor;
        best_last = std::countr_zero(closers);
        best_mask = mask;
        best_dp = dp;
      }
      for_each_bit(ends, [&](int v) {
        std::uint64_t ext = g.neighbors(v) & avail & ~mask;
        for_each_bit(ext, [&](int w) {
          dp[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w));
        });
      });
    }
  }
  if (best_len == 0) return std::nullopt;
  Cycle c;
  c.vertices = backtrack(g, best_dp, best_mask, best_last, best_anchor);
  return c;
}

std::optional<Cycle> hamilton_cycle_exact(const Graph& g) {
  int n = g.order();
  if (n > kHamiltonBudget)
    fail(Status::budget_exceeded, "Hamilton DP is budgeted for n <= 16");
  if (n < 3) return std::nullopt;

  std::uint64_t space = std::uint64_t{1} << n;
  std::uint64_t full = g.vertex_set();
  std::vector<std::uint32_t> dp(static_cast<size_t>(space), 0);
  dp[1] = 1;  // the path {0} ending at 0
  for (std::uint64_t mask = 1; mask < space; mask += 2) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    for_each_bit(ends, [&](int v) {
      std::uint64_t ext = g.neighbors(v) & ~mask;
      for_each_bit(ext, [&](int w) {
        dp[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w));
      });
    });
  }
  std::uint32_t closers =
      dp[full] & ~std::uint32_t{1} & static_cast<std::uint32_t>(g.neighbors(0));
  if (!closers) return std::nullopt;
  Cycle c;
  c.vertices = backtrack(g, dp, full, std::countr_zero(closers), 0);
  return c;
}

}  // namespace circ
