#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crosslab/errors.hpp"

namespace crosslab {

// Edge endpoints are kept normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  if (u == v) throw SelfLoopError(u);
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on dense 0-based vertex ids.
/// Values are immutable after construction; all queries are const and safe
/// to call concurrently.
class Graph {
 public:
  Graph() = default;

  Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw InvalidParameterError("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u == v) throw SelfLoopError(u);
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_)
        throw InvalidVertexError("edge endpoint out of range: (" +
                                 std::to_string(u) + "," + std::to_string(v) +
                                 ") with n=" + std::to_string(n_));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges in canonical (lexicographic) order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v in ascending id order.
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), other);
  }

  /// Index of a normalized edge in edges(), or -1.
  int edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InvalidVertexError("vertex " + std::to_string(v) +
                               " out of range, n=" + std::to_string(n_));
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Sorted duplicate-free subset of the vertices of a host graph.
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }

  void validate_for(const Graph& g) const {
    for (int v : members) g.check_vertex(v);
  }

  bool operator==(const VertexSet& other) const {
    return members == other.members;
  }
  bool operator<(const VertexSet& other) const {
    return members < other.members;
  }
};

/// Builds a graph from vertex-id pairs. vertex_count defaults to 1 + max id
/// (0 for an empty list) and may be forced higher with the override.
inline Graph from_edge_list(const std::vector<Edge>& pairs,
                            std::optional<int> vertex_count_override = {}) {
  int n = 0;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0) throw InvalidVertexError("negative vertex id");
    n = std::max({n, u + 1, v + 1});
  }
  if (vertex_count_override) {
    if (*vertex_count_override < n)
      throw InvalidParameterError("vertex count override below 1 + max id");
    n = *vertex_count_override;
  }
  return Graph(n, pairs);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
  return degs;
}

/// An induced subgraph relabeled to 0..|S|-1 (preserving id order) together
/// with the relabeling map: original_ids[new_id] = old_id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.validate_for(g);
  std::vector<int> to_new(g.vertex_count(), -1);
  for (int i = 0; i < s.size(); ++i) to_new[s.members[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (to_new[u] >= 0 && to_new[v] >= 0)
      edges.push_back(make_edge(to_new[u], to_new[v]));
  return {Graph(s.size(), std::move(edges)), s.members};
}

/// Connected components as induced subgraphs plus their original-id sets,
/// ordered by decreasing vertex count, ties by smallest original id.
inline std::vector<InducedSubgraph> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> member_lists(count);
  for (int v = 0; v < n; ++v) member_lists[comp[v]].push_back(v);
  // Vertices were visited in ascending order, so member_lists[i] is sorted
  // and member_lists[i].front() is the component's smallest id.
  std::sort(member_lists.begin(), member_lists.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });
  std::vector<InducedSubgraph> result;
  result.reserve(count);
  for (auto& members : member_lists)
    result.push_back(induced_subgraph(g, VertexSet(std::move(members))));
  return result;
}

/// Sum of d_i^t over all vertices. Exact integer arithmetic for integer t
/// (exact as long as the result stays below 2^53), std::pow otherwise.
inline double degree_power_sum(const Graph& g, double t) {
  if (!(t > 0)) throw InvalidParameterError("degree_power_sum requires t > 0");
  const bool integral = t == std::floor(t) && t <= 64;
  double sum = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double d = g.degree(v);
    if (integral) {
      double p = 1.0;
      for (int i = 0; i < static_cast<int>(t); ++i) p *= d;
      sum += p;
    } else {
      sum += std::pow(d, t);
    }
  }
  return sum;
}

}  // namespace crosslab
