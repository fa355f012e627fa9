#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crosslab/bounds.hpp"
#include "crosslab/drawing.hpp"
#include "crosslab/graph.hpp"

namespace crosslab {

/// n x n unit-distance grid on [n]^2, row-major ids, with its integer
/// drawing: vertex (r,c) at point (c, r). 2n(n-1) edges, max degree 4.
inline Drawing grid(int n) {
  if (n < 2) throw InvalidParameterError("grid requires n >= 2");
  std::vector<Edge> edges;
  std::vector<Point> coords;
  coords.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int id = r * n + c;
      coords.push_back({Rat(c), Rat(r)});
      if (c + 1 < n) edges.push_back({id, id + 1});
      if (r + 1 < n) edges.push_back({id, id + n});
    }
  return Drawing(Graph(n * n, std::move(edges)), std::move(coords));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InvalidParameterError("complete_graph requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// K_{s,t}: parts {0..s-1} and {s..s+t-1}.
inline Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw InvalidParameterError("complete_bipartite: s,t >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) edges.push_back({u, s + v});
  return Graph(s + t, std::move(edges));
}

inline Graph path_graph(int n) {
  if (n < 1) throw InvalidParameterError("path_graph requires n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameterError("cycle_graph requires n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

/// Star K_{1,n-1} with center 0.
inline Graph star_graph(int n) {
  if (n < 2) throw InvalidParameterError("star_graph requires n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(edges));
}

/// Named fixture dispatcher: "kn:5", "kst:3:3", "path:4", "cycle:6",
/// "star:10", "petersen", "grid:4".
inline Graph classics(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw InvalidParameterError("empty generator name");
  auto arg = [&](size_t i) {
    if (i >= parts.size())
      throw InvalidParameterError("generator " + parts[0] + ": missing parameter");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw InvalidParameterError("generator " + name + ": bad parameter");
    }
  };
  const std::string& kind = parts[0];
  if (kind == "kn") return complete_graph(arg(1));
  if (kind == "kst") return complete_bipartite(arg(1), arg(2));
  if (kind == "path") return path_graph(arg(1));
  if (kind == "cycle") return cycle_graph(arg(1));
  if (kind == "star") return star_graph(arg(1));
  if (kind == "petersen") return petersen_graph();
  if (kind == "grid") return grid(arg(1)).graph;
  throw InvalidParameterError("unknown generator: " + name);
}

/// Erdos-Renyi G(n,p). Deterministic across platforms: pairs (u,v), u < v,
/// are visited in lexicographic order and an edge is kept iff the next
/// 53-bit uniform draw from mt19937_64(seed) is < p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidParameterError("random_graph requires n >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidParameterError("random_graph requires p in [0,1]");
  std::mt19937_64 eng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double draw = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({u, v});
    }
  return Graph(n, std::move(edges));
}

/// The K_{s,s} edge-replacement construction: S is the set of endpoints of
/// the selected edges; every v in S becomes an independent set I_v of size s;
/// edges into V \ S fan out s ways and edges inside S become complete
/// bipartite I_u -- I_v gadgets.
struct BlowupSpec {
  Graph base;
  std::vector<Edge> selected_edges;
  int s = 3;
};

struct BlowupResult {
  Graph graph;
  std::vector<std::vector<int>> images;  // original vertex -> its new ids
};

inline BlowupResult blowup(const BlowupSpec& spec) {
  if (spec.s < 3) throw InvalidParameterError("blowup requires s >= 3");
  const Graph& base = spec.base;
  std::vector<char> in_s(base.vertex_count(), 0);
  for (auto [u, v] : spec.selected_edges) {
    if (!base.has_edge(u, v))
      throw InvalidParameterError("blowup: selected edge not in base graph");
    in_s[u] = in_s[v] = 1;
  }
  std::vector<std::vector<int>> images(base.vertex_count());
  int next = 0;
  for (int v = 0; v < base.vertex_count(); ++v) {
    int copies = in_s[v] ? spec.s : 1;
    for (int i = 0; i < copies; ++i) images[v].push_back(next++);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : base.edges())
    for (int a : images[u])
      for (int b : images[v]) edges.push_back(make_edge(a, b));
  return {Graph(next, std::move(edges)), std::move(images)};
}

/// True iff G contains a simple cycle of length exactly L. Exhaustive DFS
/// with canonical-start pruning (the cycle's smallest vertex is the root)
/// and a distance-to-root admissible bound.
inline bool has_cycle_of_length(const Graph& g, int L, int cap = 30) {
  if (L < 3) throw InvalidParameterError("cycle length must be >= 3");
  const int n = g.vertex_count();
  if (n > cap)
    throw TooLargeError("has_cycle_of_length: n = " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  if (L > n) return false;

  std::vector<int> dist(n);
  std::vector<char> on_path(n, 0);

  for (int root = 0; root < n; ++root) {
    // BFS distances to root within {root, root+1, ...}
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (w >= root && dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }

    // DFS over simple paths root = v0, v1, ... with v_i > root for i >= 1
    struct Frame {
      int vertex;
      size_t next;
    };
    std::vector<Frame> stack;
    on_path.assign(n, 0);
    stack.push_back({root, 0});
    on_path[root] = 1;
    while (!stack.empty()) {
      const size_t fi = stack.size() - 1;
      const int v = stack[fi].vertex;
      const int depth = static_cast<int>(fi);  // edges used so far
      if (depth == L - 1) {
        if (g.has_edge(v, root)) return true;
        on_path[v] = 0;
        stack.pop_back();
        continue;
      }
      const auto& nbrs = g.neighbors(v);
      bool advanced = false;
      while (stack[fi].next < nbrs.size()) {
        int w = nbrs[stack[fi].next++];
        if (w <= root || on_path[w]) continue;
        if (dist[w] == -1 || dist[w] > L - 1 - depth) continue;  // cannot close
        stack.push_back({w, 0});
        on_path[w] = 1;
        advanced = true;
        break;
      }
      if (!advanced) {
        on_path[v] = 0;
        stack.pop_back();
      }
    }
  }
  return false;
}

struct BsReport {
  bool c2k_free = false;
  double edge_bound = 0;
  bool holds = false;  // c2k_free implies e <= edge_bound
};

/// Checks the C_{2k}-free edge bound on one graph. holds must always come
/// back true; the theorem is unconditional.
inline BsReport bs_check(const Graph& g, int k, int cycle_cap = 30) {
  if (k < 2) throw InvalidParameterError("bs_check requires k >= 2");
  BsReport report;
  report.c2k_free = !has_cycle_of_length(g, 2 * k, cycle_cap);
  report.edge_bound = bs_max_edges(std::max<long long>(1, g.vertex_count()), k);
  report.holds = !report.c2k_free || g.edge_count() <= report.edge_bound;
  return report;
}

}  // namespace crosslab
