#include "meshdom/report.hpp"

#include <algorithm>
#include <sstream>

namespace meshdom {

Json report_envelope(const std::string& command, Json params, Json result,
                     double timing_ms) {
  Json report;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["command"] = command;
  report["params"] = std::move(params);
  report["result"] = std::move(result);
  report["timing_ms"] = timing_ms;
  return report;
}

Json vertex_json(VertexId v) { return to_string(v); }

Json edge_json(const EdgeId& e) {
  return Json::array({to_string(e.a), to_string(e.b)});
}

Json bondage_result_json(const GridSpec& spec, const BondageResult& r) {
  Json out;
  out["n"] = spec.n;
  out["m"] = spec.m;
  out["gamma"] = r.gamma_before;
  if (r.exact)
    out["b"] = r.b;
  else
    out["b"] = nullptr;
  Json witness = Json::array();
  for (const EdgeId& e : r.witness) witness.push_back(edge_json(e));
  out["witness"] = std::move(witness);
  out["subsets_evaluated"] = r.subsets_evaluated;
  out["max_k"] = r.max_k;
  out["exact"] = r.exact;
  return out;
}

Json census_json(const BoundaryCensus& c) {
  Json out;
  out["gamma"] = c.gamma;
  out["total"] = c.total.str();
  Json support = Json::array();
  for (const auto& [key, count] : c.counts) {
    Json entry;
    entry["first"] = key.first;
    entry["last"] = key.second;
    entry["count"] = count.str();
    support.push_back(std::move(entry));
  }
  out["support"] = std::move(support);
  return out;
}

Json gamma_result_json(const GridSpec& spec, int gamma, const std::string& source,
                       const std::vector<VertexId>& witness,
                       const BoundaryCensus* census) {
  Json out;
  out["n"] = spec.n;
  out["m"] = spec.m;
  out["gamma"] = gamma;
  out["source"] = source;
  Json members = Json::array();
  for (VertexId v : witness) members.push_back(vertex_json(v));
  out["witness"] = std::move(members);
  out["census"] = census ? census_json(*census) : Json(nullptr);
  return out;
}

Json oracle_result_json(const Graph& g, const OracleResult& r) {
  Json out;
  out["vertices"] = g.order();
  out["edges"] = g.edge_count();
  out["gamma"] = r.gamma;
  Json witness = Json::array();
  for (int v : r.witness) witness.push_back(v + 1);  // 1-indexed like the file format
  out["witness"] = std::move(witness);
  out["nodes_explored"] = r.nodes_explored;
  return out;
}

Json verify_result_json(Construction id, int n, const std::optional<EdgeId>& edge,
                        const DominatingSet& set, bool dominates,
                        bool matches_gamma) {
  Json out;
  out["construction"] = to_string(id);
  out["n"] = n;
  GridSpec host = construction_host(id, n, edge);
  Json host_json;
  host_json["n"] = host.n;
  host_json["m"] = host.m;
  host_json["removed_edge"] = edge ? Json(to_string(*edge)) : Json(nullptr);
  out["host"] = std::move(host_json);
  Json members = Json::array();
  for (VertexId v : set.members) members.push_back(vertex_json(v));
  out["set"] = std::move(members);
  out["cardinality"] = set.members.size();
  out["dominates"] = dominates;
  out["matches_gamma"] = matches_gamma;
  return out;
}

std::vector<SweepRow> run_sweep(int m, int n_from, int n_to, int bound,
                                const BondageOptions& base_opts) {
  if (n_from < 1 || n_to < n_from) throw SpecError("empty sweep range");
  if (bound < 1) throw SpecError("bound must be >= 1");
  std::vector<SweepRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    GridSpec spec(n, m);
    BondageOptions opts = base_opts;
    int fallback = default_max_k(spec);
    opts.max_k = std::max(opts.max_k.value_or(fallback), bound);
    SweepRow row;
    row.n = n;
    row.m = m;
    row.result = bondage(spec, opts);
    row.within_bound = row.result.exact && row.result.b <= bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json sweep_json(const std::vector<SweepRow>& rows, int bound) {
  Json out;
  out["bound"] = bound;
  Json list = Json::array();
  for (const SweepRow& row : rows) {
    GridSpec spec(row.n, row.m);
    Json entry = bondage_result_json(spec, row.result);
    entry["conjecture"] = row.within_bound ? kConjectureOk : kConjectureViolated;
    list.push_back(std::move(entry));
  }
  out["rows"] = std::move(list);
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int bound) {
  std::ostringstream out;
  out << "n,m,gamma,b,exact,witness,subsets_evaluated,conjecture\n";
  for (const SweepRow& row : rows) {
    const BondageResult& r = row.result;
    out << row.n << ',' << row.m << ',' << r.gamma_before << ',';
    if (r.exact)
      out << r.b;
    out << ',' << (r.exact ? "true" : "false") << ",\"";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) out << ';';
      out << to_string(r.witness[i]);
    }
    out << "\"," << r.subsets_evaluated << ','
        << (row.within_bound ? kConjectureOk : kConjectureViolated) << '\n';
  }
  (void)bound;
  return out.str();
}

std::string render_grid(const GridSpec& spec) {
  DominatingSet set = extract_min_set(spec);
  std::set<VertexId> chosen(set.members.begin(), set.members.end());
  std::ostringstream out;
  for (int j = 1; j <= spec.m; ++j) {
    for (int i = 1; i <= spec.n; ++i) {
      if (i > 1) out << ' ';
      VertexId v{i, j};
      if (!spec.vertex_live(v))
        out << ' ';
      else
        out << (chosen.count(v) ? '#' : '.');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace meshdom
