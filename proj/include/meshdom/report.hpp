#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meshdom/bondage.hpp"
#include "meshdom/formulas.hpp"
#include "meshdom/oracle.hpp"
#include "meshdom/profile_dp.hpp"

namespace meshdom {

inline constexpr const char* kToolName = "meshdom";
inline constexpr const char* kToolVersion = "0.1.0";

// Reports keep insertion order so identical invocations serialize to
// identical bytes (apart from the timing field).
using Json = nlohmann::ordered_json;

Json report_envelope(const std::string& command, Json params, Json result,
                     double timing_ms);

Json vertex_json(VertexId v);
Json edge_json(const EdgeId& e);
Json bondage_result_json(const GridSpec& spec, const BondageResult& r);
Json census_json(const BoundaryCensus& c);  // counts as decimal strings
Json gamma_result_json(const GridSpec& spec, int gamma, const std::string& source,
                       const std::vector<VertexId>& witness,
                       const BoundaryCensus* census);
Json oracle_result_json(const Graph& g, const OracleResult& r);
Json verify_result_json(Construction id, int n, const std::optional<EdgeId>& edge,
                        const DominatingSet& set, bool dominates, bool matches_gamma);

inline constexpr const char* kConjectureOk = "CONJECTURE-OK";
inline constexpr const char* kConjectureViolated = "CONJECTURE-VIOLATED";

struct SweepRow {
  int n = 0;
  int m = 0;
  BondageResult result;
  bool within_bound = false;  // b <= bound, decided by the bounded search
};

// One bondage search per width in [n_from, n_to]; max_k is raised to at
// least the bound so the flag is always decidable.
std::vector<SweepRow> run_sweep(int m, int n_from, int n_to, int bound,
                                const BondageOptions& base_opts);

Json sweep_json(const std::vector<SweepRow>& rows, int bound);
std::string sweep_csv(const std::vector<SweepRow>& rows, int bound);

// ASCII picture of one minimum dominating set: '#' chosen, '.' other,
// ' ' deleted.
std::string render_grid(const GridSpec& spec);

}  // namespace meshdom
