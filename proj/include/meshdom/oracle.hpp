#pragma once

#include <cstdint>
#include <vector>

#include "meshdom/grid.hpp"

namespace meshdom {

struct OracleResult {
  int gamma = 0;
  std::vector<int> witness;  // graph indices, ascending; least minimum set
  std::uint64_t nodes_explored = 0;
};

struct OracleOptions {
  int vertex_cap = 32;  // refuse larger instances instead of running unbounded
};

// Exact domination number by branch and bound: branch on the lowest-indexed
// undominated vertex, trying each member of its closed neighborhood in
// ascending order. The witness is the lexicographically least minimum
// dominating set under vertex order, found by a second bounded scan.
OracleResult gamma_oracle(const Graph& g, const OracleOptions& opts = {});

// Every minimum dominating set, as sorted index vectors in lexicographic
// order. Enumeration is exponential; guarded by the vertex cap.
std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g,
                                                      int vertex_cap = 24);

// Adapter for hosts that carry mesh coordinates.
DominatingSet to_dominating_set(const Graph& g, const std::vector<int>& indices);

}  // namespace meshdom
