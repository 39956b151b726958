#include "meshdom/grid.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace meshdom {

namespace {

struct Fnv64 {
  std::uint64_t h = 1469598103934665603ull;
  void mix(std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  }
};

int parse_int_strict(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw SpecError("malformed integer literal: '" + std::string(s) + "'");
  return value;
}

}  // namespace

FactorSpec::FactorSpec(FactorKind kind, int order) : kind(kind), order(order) {
  if (kind == FactorKind::path && order < 1)
    throw SpecError("path factor requires order >= 1");
  if (kind == FactorKind::cycle && order < 3)
    throw SpecError("cycle factor requires order >= 3");
}

bool FactorSpec::adjacent(int x, int y) const {
  int d = std::abs(x - y);
  if (kind == FactorKind::path) return d == 1;
  return d == 1 || d == order - 1;
}

std::string to_string(VertexId v) {
  return std::to_string(v.i) + "," + std::to_string(v.j);
}

VertexId parse_vertex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw SpecError("vertex literal must be 'i,j': '" + text + "'");
  return VertexId{parse_int_strict(std::string_view(text).substr(0, comma)),
                  parse_int_strict(std::string_view(text).substr(comma + 1))};
}

EdgeId::EdgeId(VertexId x, VertexId y) {
  bool vertical = x.i == y.i && std::abs(x.j - y.j) == 1;
  bool horizontal = x.j == y.j && std::abs(x.i - y.i) == 1;
  if (!vertical && !horizontal)
    throw SpecError("endpoints " + to_string(x) + " and " + to_string(y) +
                    " are not mesh-adjacent");
  a = std::min(x, y);
  b = std::max(x, y);
}

std::string to_string(const EdgeId& e) {
  return to_string(e.a) + ":" + to_string(e.b);
}

EdgeId parse_edge(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw SpecError("edge literal must be 'i,j:i,j': '" + text + "'");
  return EdgeId(parse_vertex(text.substr(0, colon)),
                parse_vertex(text.substr(colon + 1)));
}

GridSpec::GridSpec(int n, int m, std::set<EdgeId> del_edges,
                   std::set<VertexId> del_vertices)
    : n(n), m(m), deleted_edges(std::move(del_edges)),
      deleted_vertices(std::move(del_vertices)) {
  if (n < 1 || m < 1) throw SpecError("grid requires n >= 1 and m >= 1");
  auto in_range = [&](VertexId v) {
    return v.i >= 1 && v.i <= n && v.j >= 1 && v.j <= m;
  };
  for (VertexId v : deleted_vertices)
    if (!in_range(v))
      throw SpecError("deleted vertex " + to_string(v) + " outside " +
                      std::to_string(n) + "x" + std::to_string(m) + " mesh");
  for (const EdgeId& e : deleted_edges)
    if (!in_range(e.a) || !in_range(e.b))
      throw SpecError("deleted edge " + to_string(e) + " outside " +
                      std::to_string(n) + "x" + std::to_string(m) + " mesh");
  // Normalize: an edge incident to a deleted vertex is already gone.
  std::erase_if(deleted_edges, [&](const EdgeId& e) {
    return deleted_vertices.count(e.a) || deleted_vertices.count(e.b);
  });
}

bool GridSpec::vertex_live(VertexId v) const {
  return v.i >= 1 && v.i <= n && v.j >= 1 && v.j <= m &&
         !deleted_vertices.count(v);
}

bool GridSpec::edge_live(const EdgeId& e) const {
  return vertex_live(e.a) && vertex_live(e.b) && !deleted_edges.count(e);
}

std::vector<VertexId> GridSpec::live_vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      if (vertex_live({i, j})) out.push_back({i, j});
  return out;
}

std::vector<EdgeId> GridSpec::live_edges() const {
  std::vector<EdgeId> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      VertexId v{i, j};
      if (j + 1 <= m) {
        EdgeId e(v, {i, j + 1});
        if (edge_live(e)) out.push_back(e);
      }
      if (i + 1 <= n) {
        EdgeId e(v, {i + 1, j});
        if (edge_live(e)) out.push_back(e);
      }
    }
  }
  return out;  // generated in canonical ascending order
}

std::uint64_t GridSpec::hash() const {
  Fnv64 f;
  f.mix(static_cast<std::uint64_t>(n));
  f.mix(static_cast<std::uint64_t>(m));
  for (VertexId v : deleted_vertices) f.mix((std::uint64_t(v.i) << 32) | std::uint64_t(v.j));
  for (const EdgeId& e : deleted_edges) {
    f.mix((std::uint64_t(e.a.i) << 32) | std::uint64_t(e.a.j));
    f.mix((std::uint64_t(e.b.i) << 32) | std::uint64_t(e.b.j));
  }
  return f.h;
}

Graph::Graph(int order) : adj(order), label(order) {
  for (int v = 0; v < order; ++v) label[v] = v;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw SpecError("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw SpecError("edge endpoint out of range");
  auto insert_sorted = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert_sorted(adj[u], v);
  insert_sorted(adj[v], u);
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < order(); ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::index_of_label(int lbl) const {
  // Labels are ascending for realized meshes and identity otherwise.
  auto it = std::lower_bound(label.begin(), label.end(), lbl);
  if (it != label.end() && *it == lbl) return static_cast<int>(it - label.begin());
  return -1;
}

int Graph::index_of(VertexId v) const {
  if (coord_rows <= 0)
    throw SpecError("graph carries no mesh coordinates");
  if (v.i < 1 || v.j < 1 || v.j > coord_rows) return -1;
  return index_of_label(linear_id(v, coord_rows));
}

std::uint64_t Graph::hash() const {
  Fnv64 f;
  f.mix(static_cast<std::uint64_t>(order()));
  for (int u = 0; u < order(); ++u) {
    f.mix(static_cast<std::uint64_t>(adj[u].size()));
    for (int v : adj[u]) f.mix(static_cast<std::uint64_t>(v));
  }
  return f.h;
}

DominatingSet DominatingSet::of(const GridSpec& spec, std::vector<VertexId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (VertexId v : members)
    if (!spec.vertex_live(v))
      throw SpecError("member " + to_string(v) + " is not a live vertex of the host");
  return DominatingSet{std::move(members), spec.hash()};
}

Graph make_product(const FactorSpec& a, const FactorSpec& b) {
  Graph g(a.order * b.order);
  auto id = [&](int x1, int x2) { return (x1 - 1) * b.order + (x2 - 1); };
  for (int x1 = 1; x1 <= a.order; ++x1) {
    for (int x2 = 1; x2 <= b.order; ++x2) {
      for (int y2 = x2 + 1; y2 <= b.order; ++y2)  // vertical: first coordinate fixed
        if (b.adjacent(x2, y2)) g.add_edge(id(x1, x2), id(x1, y2));
      for (int y1 = x1 + 1; y1 <= a.order; ++y1)  // horizontal: second coordinate fixed
        if (a.adjacent(x1, y1)) g.add_edge(id(x1, x2), id(y1, x2));
    }
  }
  g.coord_rows = b.order;
  g.source_hash = g.hash();
  return g;
}

Graph realize(const GridSpec& spec) {
  std::vector<VertexId> live = spec.live_vertices();
  Graph g(static_cast<int>(live.size()));
  for (std::size_t k = 0; k < live.size(); ++k) g.label[k] = linear_id(live[k], spec.m);
  g.coord_rows = spec.m;
  for (const EdgeId& e : spec.live_edges()) {
    int u = g.index_of_label(linear_id(e.a, spec.m));
    int v = g.index_of_label(linear_id(e.b, spec.m));
    g.add_edge(u, v);
  }
  g.source_hash = spec.hash();
  return g;
}

std::vector<VertexId> vertical_set(const GridSpec& spec, int i) {
  if (i < 1 || i > spec.n)
    throw SpecError("column index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(spec.n));
  std::vector<VertexId> out;
  for (int j = 1; j <= spec.m; ++j)
    if (spec.vertex_live({i, j})) out.push_back({i, j});
  return out;
}

bool is_dominating(const Graph& g, const std::vector<int>& members) {
  std::vector<char> covered(g.order(), 0);
  for (int v : members) {
    if (v < 0 || v >= g.order())
      throw SpecError("member index " + std::to_string(v) + " out of range");
    covered[v] = 1;
    for (int w : g.adj[v]) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_dominating(const Graph& g, const DominatingSet& s) {
  if (s.host != 0 && g.source_hash != 0 && s.host != g.source_hash)
    throw SpecError("dominating set belongs to a different instance");
  std::vector<int> idx;
  idx.reserve(s.members.size());
  for (VertexId v : s.members) {
    int k = g.index_of(v);
    if (k < 0) throw SpecError("member " + to_string(v) + " not present in graph");
    idx.push_back(k);
  }
  return is_dominating(g, idx);
}

bool is_dominating(const GridSpec& spec, const DominatingSet& s) {
  return is_dominating(realize(spec), s);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  long declared_edges = -1;
  Graph g;
  long seen = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw SpecError("duplicate 'p' header at line " + std::to_string(lineno));
      if (!(ls >> n >> declared_edges) || n < 0 || declared_edges < 0)
        throw SpecError("malformed 'p' header at line " + std::to_string(lineno));
      g = Graph(n);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw SpecError("'e' line before 'p' header at line " + std::to_string(lineno));
      int u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw SpecError("malformed 'e' line at line " + std::to_string(lineno));
      g.add_edge(u - 1, v - 1);
      ++seen;
      continue;
    }
    throw SpecError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
  }
  if (n < 0) throw SpecError("missing 'p' header");
  if (seen != declared_edges)
    throw SpecError("header declares " + std::to_string(declared_edges) +
                    " edges but file has " + std::to_string(seen));
  g.source_hash = g.hash();
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

}  // namespace meshdom
