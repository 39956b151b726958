#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "meshdom/errors.hpp"

namespace meshdom {

enum class FactorKind { path, cycle };

// One factor of a Cartesian product: a path or a cycle on 1..order.
struct FactorSpec {
  FactorKind kind = FactorKind::path;
  int order = 1;

  FactorSpec(FactorKind kind, int order);
  bool adjacent(int x, int y) const;  // 1-based factor vertices
};

// Mesh vertex addressed by (column i, row j), both 1-based.
struct VertexId {
  int i = 0;
  int j = 0;
  auto operator<=>(const VertexId&) const = default;
};

// (i-1)*rows + (j-1); bijective with (i, j) for fixed row count.
inline int linear_id(VertexId v, int rows) { return (v.i - 1) * rows + (v.j - 1); }

std::string to_string(VertexId v);               // "i,j"
VertexId parse_vertex(const std::string& text);  // inverse of to_string

enum class EdgeClass { vertical, horizontal };

// Unordered mesh edge; endpoints stored canonically (smaller id first).
// Construction rejects endpoint pairs that are not mesh-adjacent.
struct EdgeId {
  VertexId a, b;

  EdgeId(VertexId x, VertexId y);
  EdgeClass edge_class() const {
    return a.i == b.i ? EdgeClass::vertical : EdgeClass::horizontal;
  }
  auto operator<=>(const EdgeId&) const = default;
};

std::string to_string(const EdgeId& e);      // "i,j:i,j"
EdgeId parse_edge(const std::string& text);  // inverse of to_string

// An n x m mesh instance with optional vertex and edge deletions.
// Construction validates all ids against the intact mesh and drops deleted
// edges that are incident to a deleted vertex.
struct GridSpec {
  int n = 1;  // extent of the first factor
  int m = 1;  // extent of the second factor
  std::set<EdgeId> deleted_edges;
  std::set<VertexId> deleted_vertices;

  GridSpec(int n, int m, std::set<EdgeId> del_edges = {},
           std::set<VertexId> del_vertices = {});

  bool intact() const { return deleted_edges.empty() && deleted_vertices.empty(); }
  bool vertex_live(VertexId v) const;
  bool edge_live(const EdgeId& e) const;
  std::vector<VertexId> live_vertices() const;  // ascending
  std::vector<EdgeId> live_edges() const;       // canonical ascending
  std::uint64_t hash() const;
};

// Undirected simple graph, sorted adjacency lists. `label` keeps original
// vertex ids when the graph was carved out of a larger one; `coord_rows` > 0
// means labels are linear mesh ids with that many rows, so VertexId lookups
// are meaningful. `source_hash` identifies the instance the graph came from.
struct Graph {
  std::vector<std::vector<int>> adj;
  std::vector<int> label;
  int coord_rows = 0;
  std::uint64_t source_hash = 0;

  explicit Graph(int order = 0);

  int order() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // canonical (u < v), sorted
  int index_of_label(int lbl) const;               // -1 when absent
  int index_of(VertexId v) const;                  // requires coord_rows > 0
  std::uint64_t hash() const;
};

// A vertex set claimed to dominate a host instance.
struct DominatingSet {
  std::vector<VertexId> members;  // sorted, unique
  std::uint64_t host = 0;

  static DominatingSet of(const GridSpec& spec, std::vector<VertexId> members);
};

Graph make_product(const FactorSpec& a, const FactorSpec& b);

// Mesh graph with deleted vertices removed and deleted edges absent.
// Surviving vertices keep their linear ids in `label`, in ascending order.
Graph realize(const GridSpec& spec);

// Column i of the mesh minus deleted vertices, ascending by row.
std::vector<VertexId> vertical_set(const GridSpec& spec, int i);

bool is_dominating(const Graph& g, const std::vector<int>& members);  // graph indices
bool is_dominating(const Graph& g, const DominatingSet& s);
bool is_dominating(const GridSpec& spec, const DominatingSet& s);

// Edge-list text format: "p <vertices> <edges>" header, then one
// "e <u> <v>" line per edge, 1-indexed. Lines starting with 'c' are comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace meshdom
