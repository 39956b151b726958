#include "meshdom/bondage.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "meshdom/oracle.hpp"
#include "meshdom/profile_dp.hpp"

namespace meshdom {

namespace {

constexpr std::uint64_t kScanCap = 1'000'000'000'000ull;

std::uint64_t binom_sat(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

// k-subset of [0,E) at lexicographic rank r.
void unrank_combination(std::uint64_t r, int edges, int k, std::vector<int>& out) {
  out.clear();
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      std::uint64_t c = binom_sat(edges - 1 - v, k - 1 - pos);
      if (r < c) {
        out.push_back(v);
        ++v;
        break;
      }
      r -= c;
      ++v;
    }
  }
}

bool next_combination(std::vector<int>& c, int edges) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < edges - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// A subset is scanned only when it is the least member of its orbit under
// the instance's symmetries; the skipped images are counted, not evaluated.
bool is_orbit_representative(const std::vector<int>& combo,
                             const std::vector<std::vector<int>>& perms,
                             std::vector<int>& scratch) {
  for (const auto& p : perms) {
    scratch.clear();
    for (int e : combo) scratch.push_back(p[e]);
    std::sort(scratch.begin(), scratch.end());
    if (std::lexicographical_compare(scratch.begin(), scratch.end(),
                                     combo.begin(), combo.end()))
      return false;
  }
  return true;
}

using TestFn = std::function<bool(const std::vector<int>&)>;

struct PassResult {
  bool found = false;
  std::uint64_t found_rank = std::numeric_limits<std::uint64_t>::max();
  std::vector<int> combo;
  std::uint64_t evaluated = 0;
  std::uint64_t pruned = 0;
};

void scan_range(std::uint64_t lo, std::uint64_t hi, int edges, int k,
                const TestFn& raises_gamma,
                const std::vector<std::vector<int>>& perms, bool finish_full,
                PassResult& local) {
  std::vector<int> combo, scratch;
  unrank_combination(lo, edges, k, combo);
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (!perms.empty() && !is_orbit_representative(combo, perms, scratch)) {
      ++local.pruned;
    } else {
      ++local.evaluated;
      if (raises_gamma(combo)) {
        if (!local.found) {
          local.found = true;
          local.found_rank = r;
          local.combo = combo;
        }
        if (!finish_full) return;  // first success ends the scan
      }
    }
    if (r + 1 < hi) next_combination(combo, edges);
  }
}

// Serial reference scan of one cardinality. Kept alongside the parallel
// kernel; both must return identical results.
PassResult pass_serial(std::uint64_t total, int edges, int k,
                       const TestFn& raises_gamma,
                       const std::vector<std::vector<int>>& perms,
                       bool finish_full) {
  PassResult res;
  scan_range(0, total, edges, k, raises_gamma, perms, finish_full, res);
  return res;
}

// Round-synchronous parallel scan: each round covers jobs fixed-size chunks,
// so counters and the minimum-rank witness do not depend on thread timing.
PassResult pass_parallel(std::uint64_t total, int edges, int k,
                         const TestFn& raises_gamma,
                         const std::vector<std::vector<int>>& perms,
                         bool finish_full, int jobs) {
#ifndef _OPENMP
  (void)jobs;
  return pass_serial(total, edges, k, raises_gamma, perms, finish_full);
#else
  constexpr std::uint64_t kBlock = 2048;
  PassResult agg;
  std::vector<PassResult> locals(jobs);
  for (std::uint64_t start = 0; start < total; start += kBlock * jobs) {
    for (auto& l : locals) l = PassResult{};
#pragma omp parallel for num_threads(jobs) schedule(static, 1)
    for (int t = 0; t < jobs; ++t) {
      std::uint64_t lo = start + kBlock * static_cast<std::uint64_t>(t);
      std::uint64_t hi = std::min(lo + kBlock, total);
      if (lo < hi)
        scan_range(lo, hi, edges, k, raises_gamma, perms, finish_full, locals[t]);
    }
    for (const auto& l : locals) {
      agg.evaluated += l.evaluated;
      agg.pruned += l.pruned;
      if (l.found && l.found_rank < agg.found_rank) {
        agg.found = true;
        agg.found_rank = l.found_rank;
        agg.combo = l.combo;
      }
    }
    if (agg.found && !finish_full) break;
  }
  return agg;
#endif
}

struct EngineResult {
  BondageStats stats;
  std::vector<int> witness;
};

EngineResult run_search(int edges, int max_k, const TestFn& raises_gamma,
                        const std::vector<std::vector<int>>& perms, int jobs) {
  EngineResult res;
  res.stats.max_k = max_k;
  for (int k = 1; k <= max_k; ++k) {
    std::uint64_t total = binom_sat(edges, k);
    if (total > kScanCap)
      throw CapabilityError("cardinality-" + std::to_string(k) +
                            " pass has too many subsets to enumerate");
    bool finish_full = !perms.empty();
    PassResult pr = jobs > 1
                        ? pass_parallel(total, edges, k, raises_gamma, perms,
                                        finish_full, jobs)
                        : pass_serial(total, edges, k, raises_gamma, perms,
                                      finish_full);
    res.stats.evaluated_per_k.push_back(pr.evaluated);
    res.stats.pruned_per_k.push_back(pr.pruned);
    res.stats.subsets_evaluated += pr.evaluated;
    res.stats.pruned_by_symmetry += pr.pruned;
    res.stats.pass_exhaustive.push_back(pr.evaluated + pr.pruned == total);
    if (pr.found) {
      res.stats.exact = true;
      res.stats.b = k;
      res.witness = pr.combo;
      break;
    }
  }
  return res;
}

int grid_gamma_dispatch(const GridSpec& spec, GammaBackend backend, int cap) {
  switch (backend) {
    case GammaBackend::profile_dp:
      return gamma_grid(spec);
    case GammaBackend::oracle:
      return gamma_oracle(realize(spec), {cap}).gamma;
    case GammaBackend::automatic:
    default:
      if (spec.m <= kMaxDpRows) return gamma_grid(spec);
      return gamma_oracle(realize(spec), {cap}).gamma;
  }
}

// Rectangle symmetries as edge-index permutations: both axis flips, their
// composition, and the diagonal reflections when the mesh is square.
std::vector<std::vector<int>> grid_edge_perms(const GridSpec& spec,
                                              const std::vector<EdgeId>& edges) {
  std::vector<std::vector<int>> perms;
  auto edge_index = [&](const EdgeId& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return static_cast<int>(it - edges.begin());
  };
  int transposes = spec.n == spec.m ? 2 : 1;
  for (int t = 0; t < transposes; ++t) {
    for (int fi = 0; fi < 2; ++fi) {
      for (int fj = 0; fj < 2; ++fj) {
        if (t == 0 && fi == 0 && fj == 0) continue;
        auto map_vertex = [&](VertexId v) {
          int i = fi ? spec.n + 1 - v.i : v.i;
          int j = fj ? spec.m + 1 - v.j : v.j;
          if (t) std::swap(i, j);
          return VertexId{i, j};
        };
        std::vector<int> p(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e)
          p[e] = edge_index(EdgeId(map_vertex(edges[e].a), map_vertex(edges[e].b)));
        perms.push_back(std::move(p));
      }
    }
  }
  return perms;
}

int max_k_or_default(const std::optional<int>& requested, int fallback, int edge_count) {
  int k = requested.value_or(fallback);
  if (k < 1) throw SpecError("max_k must be >= 1");
  return std::min(k, edge_count);
}

}  // namespace

int default_max_k(const Graph& g) {
  auto edges = g.edges();
  if (edges.empty()) throw std::domain_error("instance has no edges");
  int best = std::numeric_limits<int>::max();
  for (auto [u, v] : edges)
    best = std::min(best, static_cast<int>(g.adj[u].size() + g.adj[v].size()) - 1);
  return best;
}

int default_max_k(const GridSpec& spec) { return default_max_k(realize(spec)); }

BondageResult bondage(const GridSpec& spec, const BondageOptions& opts) {
  std::vector<EdgeId> edges = spec.live_edges();
  if (edges.empty()) throw std::domain_error("instance has no edges");
  const int edge_count = static_cast<int>(edges.size());
  const int max_k = max_k_or_default(opts.max_k, default_max_k(spec), edge_count);

  bool use_dp;
  switch (opts.backend) {
    case GammaBackend::profile_dp: use_dp = true; break;
    case GammaBackend::oracle: use_dp = false; break;
    default: use_dp = spec.m <= kMaxDpRows; break;
  }

  dp_detail::ColumnMasks base_masks;
  Graph base_graph;
  std::vector<std::pair<int, int>> edge_endpoints;
  if (use_dp) {
    base_masks = dp_detail::masks_of(spec);
  } else {
    base_graph = realize(spec);
    edge_endpoints.reserve(edges.size());
    for (const EdgeId& e : edges)
      edge_endpoints.emplace_back(base_graph.index_of(e.a), base_graph.index_of(e.b));
  }

  auto gamma_minus = [&](const std::vector<int>& subset) -> int {
    if (use_dp) {
      dp_detail::ColumnMasks mk = base_masks;
      for (int e : subset) dp_detail::remove_edge(mk, edges[e]);
      return dp_detail::gamma_from_masks(mk);
    }
    Graph g = base_graph;
    for (int e : subset) {
      auto [u, v] = edge_endpoints[e];
      std::erase(g.adj[u], v);
      std::erase(g.adj[v], u);
    }
    return gamma_oracle(g, {opts.oracle_vertex_cap}).gamma;
  };

  const int gamma0 = gamma_minus({});
  TestFn raises_gamma = [&](const std::vector<int>& subset) {
    return gamma_minus(subset) > gamma0;
  };

  std::vector<std::vector<int>> perms;
  if (opts.use_symmetry && spec.intact()) perms = grid_edge_perms(spec, edges);

  EngineResult er = run_search(edge_count, max_k, raises_gamma, perms, opts.jobs);

  BondageResult result;
  static_cast<BondageStats&>(result) = er.stats;
  result.gamma_before = gamma0;
  if (result.exact) {
    for (int e : er.witness) result.witness.push_back(edges[e]);
    result.gamma_after = gamma_minus(er.witness);
  }
  return result;
}

GraphBondageResult bondage(const Graph& g, const BondageOptions& opts) {
  std::vector<std::pair<int, int>> edges = g.edges();
  if (edges.empty()) throw std::domain_error("instance has no edges");
  const int edge_count = static_cast<int>(edges.size());
  const int max_k = max_k_or_default(opts.max_k, default_max_k(g), edge_count);

  auto gamma_minus = [&](const std::vector<int>& subset) -> int {
    Graph h = g;
    for (int e : subset) {
      auto [u, v] = edges[e];
      std::erase(h.adj[u], v);
      std::erase(h.adj[v], u);
    }
    return gamma_oracle(h, {opts.oracle_vertex_cap}).gamma;
  };

  const int gamma0 = gamma_minus({});
  TestFn raises_gamma = [&](const std::vector<int>& subset) {
    return gamma_minus(subset) > gamma0;
  };

  EngineResult er = run_search(edge_count, max_k, raises_gamma, {}, opts.jobs);

  GraphBondageResult result;
  static_cast<BondageStats&>(result) = er.stats;
  result.gamma_before = gamma0;
  if (result.exact) {
    for (int e : er.witness) result.witness.push_back(edges[e]);
    result.gamma_after = gamma_minus(er.witness);
  }
  return result;
}

bool is_bondage_set(const GridSpec& spec, const std::vector<EdgeId>& edges,
                    const BondageOptions& opts) {
  if (edges.empty()) throw std::domain_error("bondage set must be nonempty");
  std::set<EdgeId> removed = spec.deleted_edges;
  for (const EdgeId& e : edges) {
    if (!spec.edge_live(e))
      throw std::domain_error("edge " + to_string(e) + " is not in the instance");
    removed.insert(e);
  }
  GridSpec cut(spec.n, spec.m, std::move(removed), spec.deleted_vertices);
  return grid_gamma_dispatch(cut, opts.backend, opts.oracle_vertex_cap) >
         grid_gamma_dispatch(spec, opts.backend, opts.oracle_vertex_cap);
}

bool is_bondage_set(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                    const BondageOptions& opts) {
  if (edges.empty()) throw std::domain_error("bondage set must be nonempty");
  Graph h = g;
  for (auto [u, v] : edges) {
    if (!h.adjacent(u, v))
      throw std::domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not in the instance");
    std::erase(h.adj[u], v);
    std::erase(h.adj[v], u);
  }
  OracleOptions oo{opts.oracle_vertex_cap};
  return gamma_oracle(h, oo).gamma > gamma_oracle(g, oo).gamma;
}

}  // namespace meshdom
