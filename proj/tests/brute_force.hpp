#pragma once

// Test-only ground truth: plain subset enumeration over the whole power set,
// independent of the solvers under test. Usable up to ~20 vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "meshdom/grid.hpp"

namespace meshdom::test {

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  if (g.order() > 20) throw std::runtime_error("brute force capped at 20 vertices");
  std::vector<std::uint32_t> closed(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::uint32_t m = 1u << v;
    for (int w : g.adj[v]) m |= 1u << w;
    closed[v] = m;
  }
  return closed;
}

inline int brute_force_gamma(const Graph& g) {
  auto closed = closed_masks(g);
  const int n = g.order();
  const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  int best = n;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) >= best) continue;
    std::uint32_t cov = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cov |= closed[v];
    }
    if (cov == full) best = std::popcount(mask);
  }
  return best;
}

// Complete bounded search, usable to ~40 vertices: choices ascend, the only
// pruning is the arithmetic bound uncovered <= remaining * max-closed-size.
inline bool dominating_set_of_size_exists(const std::vector<std::uint64_t>& closed,
                                          std::uint64_t full, int k, int maxc,
                                          int last, std::uint64_t cov) {
  if (cov == full) return true;
  if (k == 0) return false;
  if (std::popcount(full & ~cov) > k * maxc) return false;
  for (int v = last + 1; v < static_cast<int>(closed.size()); ++v) {
    if ((closed[v] & ~cov & full) == 0) continue;  // padding never needed
    if (dominating_set_of_size_exists(closed, full, k - 1, maxc, v, cov | closed[v]))
      return true;
  }
  return false;
}

inline int search_gamma(const Graph& g) {
  if (g.order() > 40) throw std::runtime_error("search oracle capped at 40 vertices");
  std::vector<std::uint64_t> closed(g.order());
  int maxc = 1;
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t m = 1ull << v;
    for (int w : g.adj[v]) m |= 1ull << w;
    closed[v] = m;
    maxc = std::max(maxc, std::popcount(m));
  }
  std::uint64_t full = (1ull << g.order()) - 1;
  for (int k = 0; k <= g.order(); ++k)
    if (dominating_set_of_size_exists(closed, full, k, maxc, -1, 0)) return k;
  return g.order();
}

inline std::vector<std::vector<int>> brute_force_min_sets(const Graph& g) {
  auto closed = closed_masks(g);
  const int n = g.order();
  const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  int gamma = brute_force_gamma(g);
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != gamma) continue;
    std::uint32_t cov = 0;
    std::vector<int> members;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cov |= closed[v];
      members.push_back(v);
    }
    if (cov == full) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace meshdom::test
