#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosslab/generators.hpp"
#include "crosslab/graph.hpp"
#include "crosslab/planarity.hpp"

namespace crosslab {

/// A set of designated edge crossings together with the graph obtained by
/// replacing each crossing with a degree-4 dummy vertex. Planarity of
/// derived_graph certifies that base can be drawn with exactly these
/// crossings, hence cr(base) <= crossing count.
struct Planarization {
  Graph base;
  // multiset of crossings as indices into base.edges(), each pair (a,b)
  // normalized a < b and the list sorted lexicographically
  std::vector<std::pair<int, int>> crossing_pairs;
  // per base edge, the crossing ids it carries, ordered from the lower
  // endpoint towards the higher one
  std::vector<std::vector<int>> order_along_edge;
  Graph derived_graph;

  int crossing_count() const { return static_cast<int>(crossing_pairs.size()); }
};

/// Builds the derived graph: dummy vertex n + cid per crossing cid, each
/// crossed edge replaced by the path through its dummies in the given order.
/// Two crossings between the same edge pair would induce a parallel edge
/// between their dummies; the simple support has the same planarity.
inline Graph planarize(const Graph& base,
                       const std::vector<std::pair<int, int>>& pairs,
                       const std::vector<std::vector<int>>& order) {
  const int n = base.vertex_count();
  std::vector<Edge> edges;
  for (int ei = 0; ei < base.edge_count(); ++ei) {
    auto [u, v] = base.edges()[ei];
    int prev = u;
    for (int cid : order[ei]) {
      edges.push_back(make_edge(prev, n + cid));
      prev = n + cid;
    }
    edges.push_back(make_edge(prev, v));
  }
  return Graph(n + static_cast<int>(pairs.size()), std::move(edges));
}

struct SearchStats {
  long long planarity_tests = 0;
  long long candidates = 0;
};

struct CrossingSearchOptions {
  long long planarity_test_budget = 50'000'000;
};

struct CrossingResult {
  std::optional<int> value;  // nullopt: every planarization up to k_max failed
  std::optional<Planarization> certificate;
  SearchStats stats;

  bool exceeds_k_max() const { return !value.has_value(); }
};

namespace detail {

class CrossingSearch {
 public:
  CrossingSearch(const Graph& g, const CrossingSearchOptions& opt)
      : g_(g), budget_(opt.planarity_test_budget) {
    const auto& edges = g_.edges();
    const int m = g_.edge_count();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        auto [u1, v1] = edges[a];
        auto [u2, v2] = edges[b];
        if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
        candidate_pairs_.push_back({a, b});
      }
  }

  CrossingResult run(int k_max) {
    CrossingResult result;
    for (int k = 0; k <= k_max; ++k) {
      chosen_.assign(k, 0);
      if (enumerate_multisets(0, 0, k)) {
        result.value = k;
        result.certificate = std::move(found_);
        break;
      }
    }
    result.stats = stats_;
    return result;
  }

 private:
  // non-decreasing index sequences into candidate_pairs_, lexicographic
  bool enumerate_multisets(int pos, int start, int k) {
    if (pos == k) return try_orderings();
    for (int i = start; i < static_cast<int>(candidate_pairs_.size()); ++i) {
      chosen_[pos] = i;
      if (enumerate_multisets(pos + 1, i, k)) return true;
    }
    return false;
  }

  // expand per-edge crossing orders; edges with >= 2 crossings get every
  // permutation, in lexicographic order, edges ascending
  bool try_orderings() {
    const int k = static_cast<int>(chosen_.size());
    std::vector<std::pair<int, int>> pairs(k);
    std::vector<std::vector<int>> order(g_.edge_count());
    for (int cid = 0; cid < k; ++cid) {
      pairs[cid] = candidate_pairs_[chosen_[cid]];
      order[pairs[cid].first].push_back(cid);
      order[pairs[cid].second].push_back(cid);
    }
    std::vector<int> multi_edges;
    for (int ei = 0; ei < g_.edge_count(); ++ei)
      if (order[ei].size() >= 2) multi_edges.push_back(ei);
    return permute_edges(0, multi_edges, pairs, order);
  }

  bool permute_edges(size_t which, const std::vector<int>& multi_edges,
                     const std::vector<std::pair<int, int>>& pairs,
                     std::vector<std::vector<int>>& order) {
    if (which == multi_edges.size()) return test_candidate(pairs, order);
    const int ei = multi_edges[which];
    auto& seq = order[ei];  // starts sorted ascending
    while (true) {
      if (permute_edges(which + 1, multi_edges, pairs, order)) return true;
      if (!std::next_permutation(seq.begin(), seq.end())) break;
    }
    // restored to sorted order by the wrapped next_permutation
    return false;
  }

  bool test_candidate(const std::vector<std::pair<int, int>>& pairs,
                      const std::vector<std::vector<int>>& order) {
    ++stats_.candidates;
    if (++stats_.planarity_tests > budget_)
      throw SearchBudgetError(
          "crossing search exceeded planarity-test budget of " +
              std::to_string(budget_),
          stats_.planarity_tests);
    Graph derived = planarize(g_, pairs, order);
    if (!is_planar(derived)) return false;
    found_ = Planarization{g_, pairs, order, std::move(derived)};
    return true;
  }

  const Graph& g_;
  long long budget_;
  std::vector<std::pair<int, int>> candidate_pairs_;
  std::vector<int> chosen_;
  Planarization found_;
  SearchStats stats_;
};

}  // namespace detail

/// Smallest k <= k_max such that some planarization of G with k crossings is
/// planar; nullopt value when none exists. The certificate is the
/// lexicographically least one at the minimum k (pairs by edge index, then
/// per-edge orderings), guaranteed by the enumeration order.
inline CrossingResult exact_crossing_number(const Graph& g, int k_max,
                                            const CrossingSearchOptions& opt = {}) {
  if (k_max > 4)
    throw KMaxTooLargeError("exact_crossing_number supports k_max <= 4");
  if (k_max < 0) throw InvalidParameterError("k_max must be nonnegative");
  return detail::CrossingSearch(g, opt).run(k_max);
}

struct FixtureEntry {
  std::string name;
  Graph graph;
  int crossing_number;
};

/// Named small graphs with known crossing numbers; every entry is
/// re-derivable from scratch by exact_crossing_number with k_max <= 4.
inline std::vector<FixtureEntry> fixture_registry() {
  std::vector<FixtureEntry> registry;
  registry.push_back({"K4", complete_graph(4), 0});
  registry.push_back({"K5", complete_graph(5), 1});
  registry.push_back({"K3,3", complete_bipartite(3, 3), 1});
  registry.push_back({"K3,4", complete_bipartite(3, 4), 2});
  registry.push_back({"petersen", petersen_graph(), 2});
  registry.push_back({"K6", complete_graph(6), 3});
  for (int n = 2; n <= 5; ++n)
    registry.push_back({"grid" + std::to_string(n), grid(n).graph, 0});
  return registry;
}

}  // namespace crosslab
