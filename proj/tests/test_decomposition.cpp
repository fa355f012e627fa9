#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "crosslab/decomposition.hpp"
#include "crosslab/generators.hpp"
#include "crosslab/json_io.hpp"

using namespace crosslab;

namespace {

// exact ceil(a/b) for positive integers
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void check_split_invariants(const Graph& g, const SplitResult& split) {
  const long long n = g.vertex_count();
  const long long e2 = 2LL * g.edge_count();
  const Graph& gp = split.split_graph;

  // edge count preserved, N in [n, 2n)
  CHECK(gp.edge_count() == g.edge_count());
  CHECK(gp.vertex_count() >= g.vertex_count());
  CHECK(gp.vertex_count() < 2 * g.vertex_count());

  // every degree capped by ceil(d_bar)
  const int cap = split.dbar_ceil();
  for (int v = 0; v < gp.vertex_count(); ++v) CHECK(gp.degree(v) <= cap);

  // group sizes: ceil(deg/d_bar) for split vertices, 1 otherwise
  for (int v = 0; v < g.vertex_count(); ++v) {
    const long long deg = g.degree(v);
    if (deg * n > e2)
      CHECK(static_cast<long long>(split.groups[v].size()) ==
            ceil_div(deg * n, e2));
    else
      CHECK(split.groups[v].size() == 1);
  }

  // contraction recovers the original exactly
  std::vector<Edge> contracted;
  for (auto [u, v] : gp.edges())
    contracted.push_back(make_edge(split.origin_of[u], split.origin_of[v]));
  std::set<Edge> unique_back(contracted.begin(), contracted.end());
  CHECK(unique_back.size() == contracted.size());  // stays simple
  CHECK(Graph(g.vertex_count(), contracted) == g);

  // assigned neighbor lists partition each split vertex's neighborhood
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> joined;
    for (int id : split.groups[v]) {
      CHECK(split.origin_of[id] == v);
      for (int w : split.assigned_neighbors[id]) joined.push_back(w);
    }
    CHECK(joined == g.neighbors(v));  // ascending-id order, nothing lost
  }
}

}  // namespace

TEST_CASE("splitting the star") {
  // K_{1,9}: d_bar = 1.8, center explodes into 5 copies with group sizes
  // 1,2,2,2,2; N = 14
  auto split = split_high_degree(star_graph(10));
  CHECK(split.split_graph.vertex_count() == 14);
  REQUIRE(split.groups[0].size() == 5);
  std::vector<size_t> sizes;
  for (int id : split.groups[0])
    sizes.push_back(split.assigned_neighbors[id].size());
  CHECK(sizes == std::vector<size_t>{1, 2, 2, 2, 2});
  check_split_invariants(star_graph(10), split);
}

TEST_CASE("splitting K4 is a no-op") {
  auto split = split_high_degree(complete_graph(4));
  CHECK(split.split_graph == complete_graph(4));
  for (const auto& group : split.groups) CHECK(group.size() == 1);
}

TEST_CASE("splitting the 5x5 grid") {
  // d_bar = 3.2; the nine degree-4 interior vertices split in two
  auto split = split_high_degree(grid(5).graph);
  CHECK(split.split_graph.vertex_count() == 34);
  int doubled = 0;
  for (const auto& group : split.groups) doubled += group.size() == 2;
  CHECK(doubled == 9);
  check_split_invariants(grid(5).graph, split);
}

TEST_CASE("split invariants hold on random graphs") {
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(2 + trial % 30, 0.05 + 0.06 * (trial % 13),
                           60'000 + trial);
    if (g.edge_count() == 0) continue;
    check_split_invariants(g, split_high_degree(g));
    ++tested;
  }
  CHECK(tested > 150);
}

TEST_CASE("split requires an edge") {
  CHECK_THROWS_AS(split_high_degree(Graph(4, {})), EmptyGraphError);
}

TEST_CASE("drawing-aware split orders neighbors by angle") {
  Drawing d = grid(3);
  auto split = split_high_degree(d.graph, d);
  // center vertex 4 has degree 4 > d_bar = 8/3, so it splits in two; its
  // clockwise neighbor order from +x is 5, 1, 3, 7
  REQUIRE(split.groups[4].size() == 2);
  CHECK(split.assigned_neighbors[split.groups[4][0]] ==
        std::vector<int>{5, 1});
  CHECK(split.assigned_neighbors[split.groups[4][1]] ==
        std::vector<int>{3, 7});
  // same combinatorial invariants as the abstract split
  CHECK(split.split_graph.edge_count() == d.graph.edge_count());
  CHECK(split.split_graph.vertex_count() ==
        split_high_degree(d.graph).split_graph.vertex_count());
}

TEST_CASE("stopping level brackets") {
  auto a = stopping_level(1000, 3000, 0.5, 1.0);
  CHECK(a.k == 15);
  CHECK_FALSE(a.degenerate);

  auto b = stopping_level(34, 40, 0.5, 1.0);
  CHECK(b.k == 9);

  // threshold above 1: degenerate flag, k = 0
  auto c = stopping_level(2, 1000, 0.5, 1.0);
  CHECK(c.k == 0);
  CHECK(c.degenerate);

  CHECK_THROWS_AS(stopping_level(0, 1, 1.0, 1.0), InvalidParameterError);
}

TEST_CASE("stopping level closed form equals direct iteration") {
  std::mt19937_64 eng(4242);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 10'000; ++trial) {
    long long N = 1 + static_cast<long long>(eng() % 100'000);
    long long e = 1 + static_cast<long long>(eng() % 1'000'000);
    double A = uniform(0.01, 50.0);
    double alpha = uniform(0.05, 4.0);
    auto closed = stopping_level(N, e, A, alpha);
    const double tau = decomposition_threshold(N, e, A, alpha);
    int iter = 0;
    while (iter < 4000 && !below_threshold(iter, tau)) ++iter;
    CAPTURE(N, e, A, alpha);
    CHECK(closed.k == iter);
    CHECK(closed.degenerate == (iter == 0));
  }
}

TEST_CASE("K4 decomposition matches the hand-run") {
  auto trace = decompose(complete_graph(4), 0.5, 1.0,
                         {BisectorPolicy::ExactOnly, 24, 0});
  CHECK(trace.stopping == 3);
  CHECK(trace.sigma == 6);
  CHECK(trace.final_edge_count == 0);
  CHECK_FALSE(trace.k_zero_flagged);
  REQUIRE(trace.levels.size() == 4);

  // level 0: the whole K4 is one large component, bisected at width 4
  CHECK(trace.levels[0].component_count == 1);
  CHECK(trace.levels[0].large_count == 1);
  CHECK(trace.levels[0].deleted == 4);
  REQUIRE(trace.levels[0].bisections.size() == 1);
  CHECK(trace.levels[0].bisections[0].part_one == std::vector<int>{0, 1});
  CHECK(trace.levels[0].bisections[0].part_two == std::vector<int>{2, 3});

  // level 1: two K2 components, each bisected at width 1
  CHECK(trace.levels[1].component_count == 2);
  CHECK(trace.levels[1].large_count == 2);
  CHECK(trace.levels[1].deleted == 2);

  // level 2: four singletons, nothing large, nothing deleted
  CHECK(trace.levels[2].component_count == 4);
  CHECK(trace.levels[2].large_count == 0);
  CHECK(trace.levels[2].deleted == 0);

  // terminal snapshot at k = 3
  CHECK(trace.levels[3].index == 3);
  CHECK(trace.levels[3].deleted == 0);

  auto verdict = verify_trace(trace, {make_exact_cr_supplier()});
  for (const auto& check : verdict.checks) {
    CAPTURE(check.name, check.detail);
    CHECK(check.status != CheckStatus::Fail);
  }
  // everything is planar here, so even the crossing budget check runs
  CHECK(verdict.find("h:crossing-budget")->status == CheckStatus::Pass);
  CHECK(verdict.find("g:final-half")->status == CheckStatus::Pass);
}

TEST_CASE("decompose flags the degenerate threshold as a diagnostic") {
  // A tiny enough that e > 2A N^(1+alpha): the density hypothesis fails
  auto trace = decompose(complete_graph(6), 0.01, 1.0);
  CHECK(trace.stopping == 0);
  CHECK(trace.k_zero_flagged);
  CHECK_FALSE(trace.diagnostics.empty());
  CHECK(trace.sigma == 0);
  auto verdict = verify_trace(trace);
  CHECK(verdict.find("d:stopping-bracket")->status == CheckStatus::Pass);
}

TEST_CASE("decomposition traces verify on the acceptance corpus") {
  struct Case {
    const char* name;
    Graph graph;
  };
  const Case cases[] = {
      {"K4", complete_graph(4)},
      {"grid4", grid(4).graph},
      {"grid5", grid(5).graph},
      {"random(20,0.3)", random_graph(20, 0.3, 42)},
  };
  for (const auto& [name, graph] : cases) {
    CAPTURE(name);
    auto trace = decompose(graph, 0.5, 1.0);
    auto verdict = verify_trace(trace);
    for (const char* check : {"a:size-bound", "b:classification",
                              "c:large-count", "d:stopping-bracket",
                              "e:accounting", "f:preimage-bound", "replay"}) {
      CAPTURE(check);
      REQUIRE(verdict.find(check) != nullptr);
      CHECK(verdict.find(check)->status == CheckStatus::Pass);
    }
    // (g) is conditional: pass when the hypothesis held, skip otherwise
    const auto* g_check = verdict.find("g:final-half");
    REQUIRE(g_check != nullptr);
    CHECK(g_check->status != CheckStatus::Fail);
  }
}

TEST_CASE("exact-only policy rejects oversized components") {
  CHECK_THROWS_AS(
      decompose(grid(5).graph, 0.5, 1.0, {BisectorPolicy::ExactOnly, 24, 0}),
      BisectorCapExceededError);
}

TEST_CASE("decompose guards") {
  CHECK_THROWS_AS(decompose(Graph(3, {}), 0.5, 1.0), EmptyGraphError);
  CHECK_THROWS_AS(decompose(complete_graph(4), -1.0, 1.0),
                  InvalidParameterError);
  CHECK_THROWS_AS(decompose(complete_graph(4), 1.0, 0.0),
                  InvalidParameterError);
}

TEST_CASE("singletons are never bisected") {
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_graph(14, 0.25, 1200 + trial);
    if (g.edge_count() == 0) continue;
    auto trace = decompose(g, 0.5, 1.0);
    for (const auto& lv : trace.levels)
      for (const auto& b : lv.bisections)
        CHECK(lv.components[b.component].n >= 2);
  }
}

TEST_CASE("verification catches forged traces") {
  auto trace = decompose(complete_graph(4), 0.5, 1.0);

  SECTION("forged large count") {
    trace.levels[0].large_count = 100;
    auto verdict = verify_trace(trace);
    const auto* c = verdict.find("c:large-count");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Fail);
    CHECK(c->detail.find("1.5") != std::string::npos);  // the (3/2)^1 bound
  }
  SECTION("forged sigma") {
    trace.sigma += 1;
    auto verdict = verify_trace(trace);
    CHECK(verdict.find("e:accounting")->status == CheckStatus::Fail);
  }
  SECTION("forged component size") {
    trace.levels[1].components[0].n = 100;
    auto verdict = verify_trace(trace);
    CHECK_FALSE(verdict.all_passed());
  }
  SECTION("forged preimage") {
    trace.preimages[0].original_ids.push_back(3);
    auto verdict = verify_trace(trace);
    CHECK(verdict.find("f:preimage-bound")->status == CheckStatus::Fail);
  }
  SECTION("forged stopping level") {
    trace.stopping += 1;
    auto verdict = verify_trace(trace);
    CHECK(verdict.find("d:stopping-bracket")->status == CheckStatus::Fail);
  }
}

TEST_CASE("trace JSON round-trips") {
  auto trace = decompose(grid(4).graph, 0.5, 1.0);
  Json j = trace_to_json(trace);
  auto back = trace_from_json(j);
  CHECK(back.stopping == trace.stopping);
  CHECK(back.sigma == trace.sigma);
  CHECK(back.final_edge_count == trace.final_edge_count);
  CHECK(back.split.split_graph == trace.split.split_graph);
  CHECK(back.split.original == trace.split.original);
  // byte-identical re-serialization
  CHECK(trace_to_json(back).dump(2) == j.dump(2));
  // and the round-tripped trace still verifies
  auto verdict = verify_trace(back);
  for (const auto& check : verdict.checks) {
    CAPTURE(check.name, check.detail);
    CHECK(check.status != CheckStatus::Fail);
  }
}

TEST_CASE("decompose is deterministic") {
  auto one = decompose(grid(5).graph, 0.5, 1.0);
  auto two = decompose(grid(5).graph, 0.5, 1.0);
  CHECK(trace_to_json(one).dump() == trace_to_json(two).dump());
}

TEST_CASE("exact-policy grid(4) passes the crossing budget check") {
  auto trace = decompose(grid(4).graph, 0.5, 1.0,
                         {BisectorPolicy::ExactOnly, 24, 0});
  auto verdict = verify_trace(trace, {make_exact_cr_supplier()});
  const auto* h = verdict.find("h:crossing-budget");
  REQUIRE(h != nullptr);
  CAPTURE(h->detail);
  CHECK(h->status == CheckStatus::Pass);
}
