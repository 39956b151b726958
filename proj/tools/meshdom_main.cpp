// meshdom: exact domination and bondage numbers of n x m mesh networks.
//
// Subcommands: gamma, bondage, oracle, verify, sweep, render.
// JSON reports go to stdout; diagnostics to stderr.
// Exit codes: 0 ok, 1 error, 2 outside closed-form coverage with --paper-only.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "meshdom/report.hpp"

using namespace meshdom;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUndefined = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

int env_default_jobs() {
  if (const char* env = std::getenv("MESHDOM_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

GridSpec spec_from(int rows, int cols, const std::vector<std::string>& del_edges,
                   const std::vector<std::string>& del_vertices) {
  std::set<EdgeId> edges;
  std::set<VertexId> vertices;
  for (const auto& s : del_edges) edges.insert(parse_edge(s));
  for (const auto& s : del_vertices) vertices.insert(parse_vertex(s));
  return GridSpec(rows, cols, std::move(edges), std::move(vertices));
}

Json deletions_json(const GridSpec& spec) {
  Json edges = Json::array();
  for (const EdgeId& e : spec.deleted_edges) edges.push_back(to_string(e));
  Json vertices = Json::array();
  for (VertexId v : spec.deleted_vertices) vertices.push_back(to_string(v));
  Json out;
  out["edges"] = std::move(edges);
  out["vertices"] = std::move(vertices);
  return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

int run_gamma(int rows, int cols, const std::vector<std::string>& del_edges,
              const std::vector<std::string>& del_vertices, bool census,
              bool paper_only) {
  Timer timer;
  GridSpec spec = spec_from(rows, cols, del_edges, del_vertices);
  Json params;
  params["rows"] = rows;
  params["cols"] = cols;
  params["deleted"] = deletions_json(spec);
  params["census"] = census;
  params["paper_only"] = paper_only;

  Json result;
  if (paper_only) {
    if (!spec.intact()) {
      std::cerr << "meshdom: closed forms cover intact meshes only\n";
      return kExitUndefined;
    }
    auto g = gamma_formula(spec.n, spec.m);
    if (!g) {
      std::cerr << "meshdom: no closed form for " << spec.n << "x" << spec.m << "\n";
      return kExitUndefined;
    }
    result = gamma_result_json(spec, *g, "closed-form", {}, nullptr);
  } else {
    int gamma = gamma_grid(spec);
    DominatingSet set = extract_min_set(spec);
    if (census) {
      BoundaryCensus bc = boundary_census(spec);
      result = gamma_result_json(spec, gamma, "profile-dp", set.members, &bc);
    } else {
      result = gamma_result_json(spec, gamma, "profile-dp", set.members, nullptr);
    }
  }
  emit(report_envelope("gamma", std::move(params), std::move(result), timer.ms()));
  return 0;
}

int run_bondage(int rows, int cols, std::optional<int> max_k, bool no_symmetry,
                int jobs, bool paper_only) {
  Timer timer;
  GridSpec spec(rows, cols);
  Json params;
  params["rows"] = rows;
  params["cols"] = cols;
  params["max_k"] = max_k ? Json(*max_k) : Json(nullptr);
  params["symmetry"] = !no_symmetry;
  params["jobs"] = jobs;
  params["paper_only"] = paper_only;

  if (paper_only) {
    auto b = bondage_formula(rows, cols);
    if (!b) {
      std::cerr << "meshdom: no closed form for b of " << rows << "x" << cols << "\n";
      return kExitUndefined;
    }
    Json result;
    result["n"] = rows;
    result["m"] = cols;
    auto g = gamma_formula(rows, cols);
    result["gamma"] = g ? Json(*g) : Json(nullptr);
    result["b"] = *b;
    result["witness"] = Json::array();
    result["subsets_evaluated"] = 0;
    result["max_k"] = 0;
    result["exact"] = true;
    emit(report_envelope("bondage", std::move(params), std::move(result), timer.ms()));
    return 0;
  }

  BondageOptions opts;
  opts.max_k = max_k;
  opts.use_symmetry = !no_symmetry;
  opts.jobs = jobs;
  BondageResult r = bondage(spec, opts);
  emit(report_envelope("bondage", std::move(params), bondage_result_json(spec, r),
                       timer.ms()));
  return 0;
}

int run_oracle(const std::string& path) {
  Timer timer;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "meshdom: cannot open '" << path << "'\n";
    return kExitError;
  }
  Graph g = read_edge_list(in);
  OracleResult r = gamma_oracle(g);
  Json params;
  params["file"] = path;
  emit(report_envelope("oracle", std::move(params), oracle_result_json(g, r), timer.ms()));
  return 0;
}

int run_verify(const std::string& name, int rows, const std::string& edge_text) {
  Timer timer;
  auto id = parse_construction(name);
  if (!id) {
    std::cerr << "meshdom: unknown construction '" << name << "'; valid names:";
    for (Construction c : kAllConstructions) std::cerr << ' ' << to_string(c);
    std::cerr << "\n";
    return kExitError;
  }
  std::optional<EdgeId> edge;
  if (!edge_text.empty()) edge = parse_edge(edge_text);

  DominatingSet set = construct(*id, rows, edge);
  GridSpec host = construction_host(*id, rows, edge);
  bool dominates = is_dominating(host, set);
  int gamma = gamma_grid(GridSpec(host.n, host.m));  // intact-host minimum
  bool matches = static_cast<int>(set.members.size()) == gamma;

  Json params;
  params["construction"] = name;
  params["rows"] = rows;
  params["edge"] = edge ? Json(to_string(*edge)) : Json(nullptr);
  emit(report_envelope("verify", std::move(params),
                       verify_result_json(*id, rows, edge, set, dominates, matches),
                       timer.ms()));
  return 0;
}

int run_sweep_cmd(int cols, int n_from, int n_to, int bound, int jobs, bool csv) {
  Timer timer;
  BondageOptions opts;
  opts.jobs = jobs;
  std::vector<SweepRow> rows = run_sweep(cols, n_from, n_to, bound, opts);
  if (csv) {
    std::cout << sweep_csv(rows, bound);
    return 0;
  }
  Json params;
  params["cols"] = cols;
  params["rows_from"] = n_from;
  params["rows_to"] = n_to;
  params["bound"] = bound;
  params["jobs"] = jobs;
  emit(report_envelope("sweep", std::move(params), sweep_json(rows, bound), timer.ms()));
  return 0;
}

int run_render(int rows, int cols) {
  GridSpec spec(rows, cols);
  std::cout << render_grid(spec);
  std::cout << "gamma = " << gamma_grid(spec) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domination and bondage toolkit for mesh networks"};
  app.require_subcommand(1);
  bool paper_only = false;
  app.add_flag("--paper-only", paper_only,
               "answer only from the built-in closed forms; exit 2 outside coverage");

  int rows = 0, cols = 0;
  std::vector<std::string> del_edges, del_vertices;
  bool census = false;
  auto* gamma_cmd = app.add_subcommand("gamma", "domination number of a mesh");
  gamma_cmd->add_option("--rows", rows, "first factor extent (n)")->required();
  gamma_cmd->add_option("--cols", cols, "second factor extent (m)")->required();
  gamma_cmd->add_option("--delete-edge", del_edges, "deleted edge 'i,j:i,j' (repeatable)");
  gamma_cmd->add_option("--delete-vertex", del_vertices, "deleted vertex 'i,j' (repeatable)");
  gamma_cmd->add_flag("--census", census, "count minimum sets by boundary-column members");

  std::optional<int> max_k;
  bool no_symmetry = false;
  int jobs = env_default_jobs();
  auto* bondage_cmd = app.add_subcommand("bondage", "bondage number of a mesh");
  bondage_cmd->add_option("--rows", rows, "first factor extent (n)")->required();
  bondage_cmd->add_option("--cols", cols, "second factor extent (m)")->required();
  bondage_cmd->add_option("--max-k", max_k, "search ceiling (default: degree-sum bound)");
  bondage_cmd->add_flag("--no-symmetry", no_symmetry, "disable orbit pruning");
  bondage_cmd->add_option("--jobs", jobs, "parallel workers (default $MESHDOM_JOBS or 1)");

  std::string graph_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact gamma of an edge-list graph");
  oracle_cmd->add_option("--file", graph_file, "edge-list file ('p V E' / 'e u v')")
      ->required();

  std::string construction_name, edge_text;
  auto* verify_cmd = app.add_subcommand("verify", "check a named dominating-set pattern");
  verify_cmd->add_option("--construction", construction_name, "pattern name")->required();
  verify_cmd->add_option("--rows", rows, "first factor extent (n)")->required();
  verify_cmd->add_option("--edge", edge_text, "removed edge 'i,j:i,j' (repair patterns)");

  int n_from = 0, n_to = 0, bound = 2;
  bool csv = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "bondage across a range of widths");
  sweep_cmd->add_option("--cols", cols, "second factor extent (m)")->required();
  sweep_cmd->add_option("--rows-from", n_from, "first width")->required();
  sweep_cmd->add_option("--rows-to", n_to, "last width")->required();
  sweep_cmd->add_option("--bound", bound, "flag rows whose b exceeds this bound");
  sweep_cmd->add_option("--jobs", jobs, "parallel workers (default $MESHDOM_JOBS or 1)");
  sweep_cmd->add_flag("--csv", csv, "emit flat CSV instead of JSON");

  auto* render_cmd = app.add_subcommand("render", "ASCII picture of one minimum set");
  render_cmd->add_option("--rows", rows, "first factor extent (n)")->required();
  render_cmd->add_option("--cols", cols, "second factor extent (m)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gamma_cmd->parsed())
      return run_gamma(rows, cols, del_edges, del_vertices, census, paper_only);
    if (bondage_cmd->parsed())
      return run_bondage(rows, cols, max_k, no_symmetry, jobs, paper_only);
    if (oracle_cmd->parsed()) return run_oracle(graph_file);
    if (verify_cmd->parsed()) return run_verify(construction_name, rows, edge_text);
    if (sweep_cmd->parsed()) return run_sweep_cmd(cols, n_from, n_to, bound, jobs, csv);
    if (render_cmd->parsed()) return run_render(rows, cols);
  } catch (const std::exception& e) {
    std::cerr << "meshdom: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
