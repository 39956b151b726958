#include "meshdom/profile_dp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace meshdom {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

// Packed column state: (chosen << m) | pending. Cells that are neither
// chosen nor pending are covered (if live) or absent (if dead). The packed
// form keeps the hot loops on plain bit masks; ColumnProfile carries the
// base-4 public encoding.
inline int packed_space(int m) { return 1 << (2 * m); }
inline std::uint16_t chosen_of(std::uint32_t s, int m) { return static_cast<std::uint16_t>(s >> m); }
inline std::uint16_t pending_of(std::uint32_t s, int m) { return static_cast<std::uint16_t>(s & ((1u << m) - 1)); }

// All transitions out of every packed source state for one column, given the
// column's live/vertical masks and the horizontal edges entering it.
struct TransitionTable {
  int m = 0;
  std::vector<std::uint32_t> row_begin;   // packed_space + 1 offsets
  std::vector<std::uint16_t> targets;     // packed next states; cost = popcount(chosen)
};

TransitionTable build_table(int m, std::uint16_t live, std::uint16_t vmask,
                            std::uint16_t hmask) {
  TransitionTable t;
  t.m = m;
  const int space = packed_space(m);
  t.row_begin.assign(space + 1, 0);
  t.targets.reserve(static_cast<std::size_t>(space));

  for (int s = 0; s < space; ++s) {
    t.row_begin[s] = static_cast<std::uint32_t>(t.targets.size());
    std::uint16_t chosen_prev = chosen_of(s, m);
    std::uint16_t pending_prev = pending_of(s, m);
    if (chosen_prev & pending_prev) continue;  // not a valid state, no row
    // Enumerate chosen subsets of the live cells, empty set included.
    std::uint16_t sub = live;
    while (true) {
      // Every pending cell must be picked up across a present horizontal edge.
      if ((pending_prev & ~(sub & hmask)) == 0) {
        std::uint16_t within = static_cast<std::uint16_t>(((sub & vmask) << 1) |
                                                          ((sub >> 1) & vmask));
        std::uint16_t covered = static_cast<std::uint16_t>(
            (within | (chosen_prev & hmask)) & live & ~sub);
        std::uint16_t pending_new = static_cast<std::uint16_t>(live & ~sub & ~covered);
        t.targets.push_back(static_cast<std::uint16_t>((sub << m) | pending_new));
      }
      if (sub == 0) break;
      sub = static_cast<std::uint16_t>((sub - 1) & live);
    }
  }
  t.row_begin[space] = static_cast<std::uint32_t>(t.targets.size());
  return t;
}

// Shared table cache: one-time build per mask key, concurrent reads after.
class TableCache {
 public:
  std::shared_ptr<const TransitionTable> get(int m, std::uint16_t live,
                                             std::uint16_t vmask,
                                             std::uint16_t hmask) {
    std::uint64_t key = (std::uint64_t(m) << 48) | (std::uint64_t(live) << 32) |
                        (std::uint64_t(vmask) << 16) | hmask;
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    auto table = std::make_shared<const TransitionTable>(build_table(m, live, vmask, hmask));
    map_.emplace(key, table);
    return table;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const TransitionTable>> map_;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

void check_rows(int m) {
  if (m < 1 || m > kMaxDpRows)
    throw CapabilityError("profile sweep supports 1.." + std::to_string(kMaxDpRows) +
                          " rows (got " + std::to_string(m) + ")");
}

std::uint32_t profile_code(std::uint16_t packed, std::uint16_t live, int m) {
  std::uint16_t chosen = chosen_of(packed, m);
  std::uint16_t pending = pending_of(packed, m);
  std::uint32_t code = 0;
  for (int r = m - 1; r >= 0; --r) {
    CellState st;
    if (!(live >> r & 1))
      st = CellState::absent;
    else if (chosen >> r & 1)
      st = CellState::chosen;
    else if (pending >> r & 1)
      st = CellState::pending;
    else
      st = CellState::covered;
    code = code * 4 + static_cast<std::uint32_t>(st);
  }
  return code;
}

}  // namespace

std::uint32_t ColumnProfile::encode() const {
  std::uint32_t code = 0;
  for (int r = rows - 1; r >= 0; --r)
    code = code * 4 + static_cast<std::uint32_t>(states[r]);
  return code;
}

ColumnProfile ColumnProfile::decode(std::uint32_t code, int rows) {
  check_rows(rows);
  if (code >= (1u << (2 * rows)))
    throw SpecError("profile code out of range for " + std::to_string(rows) + " rows");
  ColumnProfile p;
  p.rows = rows;
  p.states.resize(rows);
  for (int r = 0; r < rows; ++r) {
    p.states[r] = static_cast<CellState>(code & 3);
    code >>= 2;
  }
  return p;
}

namespace dp_detail {

ColumnMasks masks_of(const GridSpec& spec) {
  check_rows(spec.m);
  ColumnMasks mk;
  mk.n = spec.n;
  mk.m = spec.m;
  mk.live.assign(spec.n + 1, 0);
  mk.vmask.assign(spec.n + 1, 0);
  mk.hmask.assign(spec.n + 1, 0);
  for (int c = 1; c <= spec.n; ++c) {
    for (int j = 1; j <= spec.m; ++j) {
      if (spec.vertex_live({c, j})) mk.live[c] |= std::uint16_t(1) << (j - 1);
      if (j + 1 <= spec.m && spec.edge_live(EdgeId({c, j}, {c, j + 1})))
        mk.vmask[c] |= std::uint16_t(1) << (j - 1);
      if (c >= 2 && spec.edge_live(EdgeId({c - 1, j}, {c, j})))
        mk.hmask[c] |= std::uint16_t(1) << (j - 1);
    }
  }
  return mk;
}

void remove_edge(ColumnMasks& masks, const EdgeId& e) {
  if (e.edge_class() == EdgeClass::vertical)
    masks.vmask[e.a.i] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << (e.a.j - 1)));
  else
    masks.hmask[e.b.i] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << (e.a.j - 1)));
}

int gamma_from_masks(const ColumnMasks& mk) {
  check_rows(mk.m);
  const int m = mk.m;
  const int space = packed_space(m);
  std::vector<std::int32_t> dist(space, kInf), next(space);
  dist[0] = 0;  // virtual column 0: nothing chosen, nothing pending
  for (int c = 1; c <= mk.n; ++c) {
    auto table = cache().get(m, mk.live[c], mk.vmask[c], mk.hmask[c]);
    std::fill(next.begin(), next.end(), kInf);
    for (int s = 0; s < space; ++s) {
      if (dist[s] >= kInf) continue;
      for (std::uint32_t idx = table->row_begin[s]; idx < table->row_begin[s + 1]; ++idx) {
        std::uint16_t t = table->targets[idx];
        std::int32_t w = dist[s] + std::popcount(chosen_of(t, m));
        if (w < next[t]) next[t] = w;
      }
    }
    dist.swap(next);
  }
  std::int32_t best = kInf;
  for (int s = 0; s < space; ++s)
    if (pending_of(s, m) == 0) best = std::min(best, dist[s]);
  return best;  // always reachable: choosing every live cell is accepted
}

}  // namespace dp_detail

int gamma_grid(const GridSpec& spec) {
  return dp_detail::gamma_from_masks(dp_detail::masks_of(spec));
}

DominatingSet extract_min_set(const GridSpec& spec) {
  using dp_detail::ColumnMasks;
  ColumnMasks mk = dp_detail::masks_of(spec);
  const int m = mk.m;
  const int space = packed_space(m);
  if (static_cast<std::size_t>(mk.n + 1) * space > (std::size_t(1) << 26))
    throw CapabilityError("witness extraction keeps per-column tables; instance too wide");

  // Suffix feasibility: least completion cost from each state of column c.
  std::vector<std::vector<std::int32_t>> suffix(mk.n + 1,
                                                std::vector<std::int32_t>(space, kInf));
  for (int s = 0; s < space; ++s)
    if (pending_of(s, m) == 0) suffix[mk.n][s] = 0;
  for (int c = mk.n; c >= 1; --c) {
    auto table = cache().get(m, mk.live[c], mk.vmask[c], mk.hmask[c]);
    for (int s = 0; s < space; ++s) {
      std::int32_t best = kInf;
      for (std::uint32_t idx = table->row_begin[s]; idx < table->row_begin[s + 1]; ++idx) {
        std::uint16_t t = table->targets[idx];
        if (suffix[c][t] >= kInf) continue;
        best = std::min(best, suffix[c][t] + std::popcount(chosen_of(t, m)));
      }
      suffix[c - 1][s] = best;
    }
  }

  const std::int32_t gamma = suffix[0][0];
  std::vector<VertexId> members;
  std::uint16_t state = 0;
  std::int32_t spent = 0;
  for (int c = 1; c <= mk.n; ++c) {
    auto table = cache().get(m, mk.live[c], mk.vmask[c], mk.hmask[c]);
    int best_t = -1;
    std::uint32_t best_code = 0;
    for (std::uint32_t idx = table->row_begin[state]; idx < table->row_begin[state + 1]; ++idx) {
      std::uint16_t t = table->targets[idx];
      if (suffix[c][t] >= kInf) continue;
      std::int32_t total = spent + std::popcount(chosen_of(t, m)) + suffix[c][t];
      if (total != gamma) continue;
      std::uint32_t code = profile_code(t, mk.live[c], m);
      if (best_t < 0 || code < best_code) {
        best_t = t;
        best_code = code;
      }
    }
    if (best_t < 0) throw std::logic_error("sweep traceback lost the optimum");
    std::uint16_t chosen = chosen_of(static_cast<std::uint16_t>(best_t), m);
    for (int j = 1; j <= m; ++j)
      if (chosen >> (j - 1) & 1) members.push_back({c, j});
    spent += std::popcount(chosen);
    state = static_cast<std::uint16_t>(best_t);
  }
  return DominatingSet::of(spec, std::move(members));
}

BoundaryCensus boundary_census(const GridSpec& spec) {
  using dp_detail::ColumnMasks;
  for (VertexId v : spec.deleted_vertices)
    if (v.i == 1 || v.i == spec.n)
      throw SpecError("census requires intact first and last columns");
  for (const EdgeId& e : spec.deleted_edges)
    if (e.a.i == 1 || e.a.i == spec.n || e.b.i == 1 || e.b.i == spec.n)
      throw SpecError("census requires intact first and last columns");

  ColumnMasks mk = dp_detail::masks_of(spec);
  const int m = mk.m;
  const int space = packed_space(m);
  const int gamma = dp_detail::gamma_from_masks(mk);

  BoundaryCensus census;
  census.gamma = gamma;

  // One tagged sweep per first-column cardinality; paths are in bijection
  // with dominating sets, so path counts are set counts.
  for (int a = 0; a <= m; ++a) {
    std::vector<std::int32_t> dist(space, kInf), ndist(space);
    std::vector<BigCount> count(space, 0), ncount(space);
    dist[0] = 0;
    count[0] = 1;
    for (int c = 1; c <= mk.n; ++c) {
      auto table = cache().get(m, mk.live[c], mk.vmask[c], mk.hmask[c]);
      std::fill(ndist.begin(), ndist.end(), kInf);
      std::fill(ncount.begin(), ncount.end(), BigCount(0));
      for (int s = 0; s < space; ++s) {
        if (dist[s] >= kInf) continue;
        for (std::uint32_t idx = table->row_begin[s]; idx < table->row_begin[s + 1]; ++idx) {
          std::uint16_t t = table->targets[idx];
          int picks = std::popcount(chosen_of(t, m));
          if (c == 1 && picks != a) continue;
          std::int32_t w = dist[s] + picks;
          if (w < ndist[t]) {
            ndist[t] = w;
            ncount[t] = count[s];
          } else if (w == ndist[t]) {
            ncount[t] += count[s];
          }
        }
      }
      dist.swap(ndist);
      count.swap(ncount);
    }
    for (int s = 0; s < space; ++s) {
      if (pending_of(s, m) != 0 || dist[s] != gamma) continue;
      int b = std::popcount(chosen_of(s, m));
      census.counts[{a, b}] += count[s];
    }
  }
  std::erase_if(census.counts, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [key, cnt] : census.counts) census.total += cnt;
  return census;
}

}  // namespace meshdom
