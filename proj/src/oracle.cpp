#include "meshdom/oracle.hpp"

#include <algorithm>
#include <bit>

namespace meshdom {

namespace {

struct SearchContext {
  int n = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> closed;  // closed neighborhood masks
  int max_closed = 1;
  std::uint64_t nodes = 0;

  explicit SearchContext(const Graph& g) : n(g.order()) {
    full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    closed.resize(n);
    for (int v = 0; v < n; ++v) {
      std::uint64_t m = 1ull << v;
      for (int w : g.adj[v]) m |= 1ull << w;
      closed[v] = m;
      max_closed = std::max(max_closed, std::popcount(m));
    }
  }

  int lowest_uncovered(std::uint64_t covered) const {
    return std::countr_zero(~covered & full);
  }

  // Branch and bound for the minimum size. `best` shrinks in place.
  void branch(std::uint64_t covered, int chosen, int& best) {
    ++nodes;
    if (covered == full) {
      best = std::min(best, chosen);
      return;
    }
    int uncovered = std::popcount(~covered & full);
    int lower = (uncovered + max_closed - 1) / max_closed;
    if (chosen + lower >= best) return;
    int u = lowest_uncovered(covered);
    std::uint64_t candidates = closed[u];
    while (candidates) {
      int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      branch(covered | closed[w], chosen + 1, best);
    }
  }

  // First dominating set of size `budget` in lexicographic order over sorted
  // member lists; DFS chooses members in ascending index order.
  bool lex_first(int last, std::uint64_t covered, int budget,
                 std::vector<int>& chosen) {
    ++nodes;
    if (covered == full) return true;
    int remaining = budget - static_cast<int>(chosen.size());
    if (remaining == 0) return false;
    std::uint64_t uncovered = ~covered & full;
    if (std::popcount(uncovered) > remaining * max_closed) return false;
    // A vertex whose whole closed neighborhood sits at or below `last`
    // can never be dominated by a later pick.
    for (std::uint64_t rest = uncovered; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if ((closed[u] >> (last + 1)) == 0) return false;
    }
    for (int v = last + 1; v < n; ++v) {
      if ((closed[v] & uncovered) == 0) continue;  // adds nothing: not in any minimum set here
      chosen.push_back(v);
      if (lex_first(v, covered | closed[v], budget, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  void enumerate_all(int last, std::uint64_t covered, int budget,
                     std::vector<int>& chosen,
                     std::vector<std::vector<int>>& out) {
    ++nodes;
    if (covered == full) {
      out.push_back(chosen);
      return;
    }
    int remaining = budget - static_cast<int>(chosen.size());
    if (remaining == 0) return;
    std::uint64_t uncovered = ~covered & full;
    if (std::popcount(uncovered) > remaining * max_closed) return;
    for (std::uint64_t rest = uncovered; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if ((closed[u] >> (last + 1)) == 0) return;
    }
    for (int v = last + 1; v < n; ++v) {
      if ((closed[v] & uncovered) == 0) continue;
      chosen.push_back(v);
      enumerate_all(v, covered | closed[v], budget, chosen, out);
      chosen.pop_back();
    }
  }
};

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() == 0) throw SpecError("empty graph has no dominating set");
  if (cap > 64) cap = 64;
  if (g.order() > cap)
    throw CapabilityError(std::string(what) + " refuses instances with more than " +
                          std::to_string(cap) + " vertices (got " +
                          std::to_string(g.order()) + ")");
}

}  // namespace

OracleResult gamma_oracle(const Graph& g, const OracleOptions& opts) {
  check_cap(g, opts.vertex_cap, "gamma oracle");
  SearchContext ctx(g);

  // Isolated vertices are in every dominating set; commit them up front.
  std::uint64_t covered = 0;
  int forced = 0;
  for (int v = 0; v < ctx.n; ++v) {
    if (ctx.closed[v] == (1ull << v)) {
      covered |= ctx.closed[v];
      ++forced;
    }
  }

  int best = ctx.n;  // whole vertex set always dominates
  ctx.branch(covered, forced, best);

  OracleResult result;
  result.gamma = best;
  std::vector<int> chosen;
  if (!ctx.lex_first(-1, 0, best, chosen))
    throw std::logic_error("witness reconstruction failed");  // unreachable
  result.witness = std::move(chosen);
  result.nodes_explored = ctx.nodes;
  return result;
}

std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g, int vertex_cap) {
  check_cap(g, vertex_cap, "minimum-set enumeration");
  int gamma = gamma_oracle(g, {std::max(vertex_cap, 32)}).gamma;
  SearchContext ctx(g);
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  ctx.enumerate_all(-1, 0, gamma, chosen, out);
  return out;  // DFS in ascending order emits lexicographically sorted sets
}

DominatingSet to_dominating_set(const Graph& g, const std::vector<int>& indices) {
  if (g.coord_rows <= 0)
    throw SpecError("graph carries no mesh coordinates");
  std::vector<VertexId> members;
  members.reserve(indices.size());
  for (int v : indices) {
    if (v < 0 || v >= g.order())
      throw SpecError("member index " + std::to_string(v) + " out of range");
    int lin = g.label[v];
    members.push_back(VertexId{lin / g.coord_rows + 1, lin % g.coord_rows + 1});
  }
  return DominatingSet{std::move(members), g.source_hash};
}

}  // namespace meshdom
