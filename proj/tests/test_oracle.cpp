#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brute_force.hpp"
#include "meshdom/oracle.hpp"
#include "meshdom/profile_dp.hpp"

using namespace meshdom;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("star graph") {
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  OracleResult r = gamma_oracle(star);
  CHECK(r.gamma == 1);
  CHECK(r.witness == std::vector<int>{0});
  CHECK(is_dominating(star, r.witness));
}

TEST_CASE("mesh and torus instances") {
  CHECK(gamma_oracle(realize(GridSpec(4, 3))).gamma == 4);
  CHECK(gamma_oracle(make_product({FactorKind::cycle, 4}, {FactorKind::cycle, 3})).gamma == 3);
}

TEST_CASE("oracle equals subset enumeration on meshes") {
  for (int n = 1; n <= 16; ++n) {
    for (int m = 1; m * n <= 16; ++m) {
      Graph g = realize(GridSpec(n, m));
      INFO("n=", n, " m=", m);
      OracleResult r = gamma_oracle(g);
      CHECK(r.gamma == test::brute_force_gamma(g));
      CHECK(is_dominating(g, r.witness));
      CHECK(static_cast<int>(r.witness.size()) == r.gamma);
    }
  }
}

TEST_CASE("oracle equals subset enumeration on random graphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, 0.3, rng);
    INFO("trial=", trial, " n=", n);
    OracleResult r = gamma_oracle(g);
    CHECK(r.gamma == test::brute_force_gamma(g));
    CHECK(is_dominating(g, r.witness));
  }
}

TEST_CASE("witness is the lexicographically least minimum set") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(9, 0.35, rng);
    auto expected = test::brute_force_min_sets(g);
    OracleResult r = gamma_oracle(g);
    CAPTURE(trial);
    CHECK(r.witness == expected.front());
  }
}

TEST_CASE("superset closure and single-edge monotonicity") {
  std::mt19937 rng(99);
  std::vector<Graph> pool;
  pool.push_back(realize(GridSpec(4, 3)));
  pool.push_back(realize(GridSpec(5, 2)));
  pool.push_back(make_product({FactorKind::cycle, 5}, {FactorKind::path, 2}));
  for (int t = 0; t < 6; ++t) pool.push_back(random_graph(8 + t % 3, 0.3, rng));

  for (const Graph& g : pool) {
    int gamma = gamma_oracle(g).gamma;
    // any superset of a dominating witness still dominates
    auto witness = gamma_oracle(g).witness;
    for (int v = 0; v < g.order(); ++v) {
      auto bigger = witness;
      bigger.push_back(v);
      CHECK(is_dominating(g, bigger));
    }
    // deleting one edge never decreases gamma and adds at most 1
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      std::erase(h.adj[u], v);
      std::erase(h.adj[v], u);
      int cut = gamma_oracle(h).gamma;
      CHECK(cut >= gamma);
      CHECK(cut <= gamma + 1);
    }
  }
}

TEST_CASE("all minimum dominating sets") {
  Graph p3 = realize(GridSpec(1, 3));
  CHECK(all_min_dominating_sets(p3) == std::vector<std::vector<int>>{{1}});

  Graph c4 = realize(GridSpec(2, 2));
  CHECK(all_min_dominating_sets(c4) == test::brute_force_min_sets(c4));

  std::mt19937 rng(1234);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(8, 0.3, rng);
    CAPTURE(trial);
    CHECK(all_min_dominating_sets(g) == test::brute_force_min_sets(g));
  }
}

TEST_CASE("every minimum set respects one-boundary-column counts on the 4x4 mesh") {
  GridSpec spec(4, 4);
  Graph g = realize(spec);
  auto sets = all_min_dominating_sets(g);
  CHECK(!sets.empty());
  for (const auto& set : sets) {
    int first = 0, last = 0;
    for (int v : set) {
      int column = g.label[v] / spec.m + 1;
      if (column == 1) ++first;
      if (column == spec.n) ++last;
    }
    CHECK(first == 1);
    CHECK(last == 1);
  }
}

TEST_CASE("prefix columns of any minimum set dominate the smaller mesh") {
  // for every minimum set D and split i: the first i+1 columns of D hold at
  // least gamma of the i-column mesh, and symmetrically from the right
  for (int n = 2; n <= 6; ++n) {
    for (int m = 2; m <= 4; ++m) {
      GridSpec spec(n, m);
      Graph g = realize(spec);
      auto sets = all_min_dominating_sets(g);
      for (const auto& set : sets) {
        std::vector<int> per_column(n + 1, 0);
        for (int v : set) ++per_column[g.label[v] / m + 1];
        for (int i = 1; i <= n - 1; ++i) {
          int prefix = 0, suffix = 0;
          for (int c = 1; c <= i + 1; ++c) prefix += per_column[c];
          for (int c = i; c <= n; ++c) suffix += per_column[c];
          INFO("n=", n, " m=", m, " i=", i);
          CHECK(gamma_grid(GridSpec(i, m)) <= prefix);
          CHECK(gamma_grid(GridSpec(n - i, m)) <= suffix);
        }
      }
    }
  }
}

TEST_CASE("caps and degenerate inputs") {
  CHECK_THROWS_AS(gamma_oracle(Graph(0)), SpecError);
  CHECK_THROWS_AS(gamma_oracle(Graph(40), {32}), CapabilityError);
  CHECK_THROWS_AS(all_min_dominating_sets(Graph(30), 24), CapabilityError);

  // isolated vertices are forced into every dominating set
  Graph iso(3);
  iso.add_edge(0, 1);
  OracleResult r = gamma_oracle(iso);
  CHECK(r.gamma == 2);
  CHECK(r.witness == std::vector<int>{0, 2});
}
