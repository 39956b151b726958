#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "meshdom/grid.hpp"

namespace meshdom {

enum class GammaBackend {
  automatic,   // profile sweep when m <= 8, oracle otherwise
  profile_dp,
  oracle,
};

struct BondageOptions {
  std::optional<int> max_k;      // default: degree-sum search ceiling
  bool use_symmetry = true;      // orbit-representative pruning on intact meshes
  int jobs = 1;                  // 1 = serial reference scan, >1 = parallel scan
  GammaBackend backend = GammaBackend::automatic;
  int oracle_vertex_cap = 32;
};

// Search statistics shared by the grid and plain-graph entry points.
struct BondageStats {
  bool exact = false;  // false: every subset up to max_k failed, so b > max_k
  int b = 0;           // meaningful when exact
  int gamma_before = 0;
  int gamma_after = 0;  // gamma with the witness removed, when exact
  int max_k = 0;
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t pruned_by_symmetry = 0;
  // Per-cardinality scan certificates, index k-1. A pass is exhaustive when
  // evaluated + pruned covers every k-subset of the edge set.
  std::vector<std::uint64_t> evaluated_per_k;
  std::vector<std::uint64_t> pruned_per_k;
  std::vector<bool> pass_exhaustive;
};

struct BondageResult : BondageStats {
  std::vector<EdgeId> witness;  // least minimum bondage set, canonical order
};

struct GraphBondageResult : BondageStats {
  std::vector<std::pair<int, int>> witness;  // graph indices
};

// Classical search ceiling: min over adjacent pairs of deg(u)+deg(v)-1.
int default_max_k(const GridSpec& spec);
int default_max_k(const Graph& g);

// Exact bondage number by scanning edge subsets in increasing cardinality,
// lexicographic within each cardinality. The witness is the
// lexicographically least minimum bondage set; the result is independent of
// symmetry pruning and of the parallel schedule.
BondageResult bondage(const GridSpec& spec, const BondageOptions& opts = {});
GraphBondageResult bondage(const Graph& g, const BondageOptions& opts = {});

bool is_bondage_set(const GridSpec& spec, const std::vector<EdgeId>& edges,
                    const BondageOptions& opts = {});
bool is_bondage_set(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                    const BondageOptions& opts = {});

}  // namespace meshdom
