#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "crosslab/geometry.hpp"
#include "crosslab/graph.hpp"

namespace crosslab {

/// Straight-line drawing: one exact rational point per vertex.
struct Drawing {
  Graph graph;
  std::vector<Point> coordinates;

  Drawing(Graph g, std::vector<Point> coords)
      : graph(std::move(g)), coordinates(std::move(coords)) {
    if (static_cast<int>(coordinates.size()) != graph.vertex_count())
      throw InvalidParameterError("drawing needs one point per vertex");
  }

  const Point& at(int v) const { return coordinates[v]; }
};

enum class ViolationKind {
  CoincidentVertices,
  VertexOnEdge,
  OverlappingSegments,
  TriplePoint
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::CoincidentVertices: return "CoincidentVertices";
    case ViolationKind::VertexOnEdge: return "VertexOnEdge";
    case ViolationKind::OverlappingSegments: return "OverlappingSegments";
    case ViolationKind::TriplePoint: return "TriplePoint";
  }
  return "?";
}

/// General-position audit: empty result iff the drawing invariants hold.
/// Violations are data, not errors.
inline std::vector<Violation> validate_drawing(const Drawing& d) {
  std::vector<Violation> out;
  const Graph& g = d.graph;
  const int n = g.vertex_count();

  std::map<Point, std::vector<int>> at_point;
  for (int v = 0; v < n; ++v) at_point[d.at(v)].push_back(v);
  for (const auto& [p, ids] : at_point)
    if (ids.size() > 1)
      out.push_back({ViolationKind::CoincidentVertices,
                     "vertices " + std::to_string(ids[0]) + " and " +
                         std::to_string(ids[1]) + " share a point"});

  for (const auto& [u, v] : g.edges())
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (point_in_open_segment(d.at(w), d.at(u), d.at(v)))
        out.push_back({ViolationKind::VertexOnEdge,
                       "vertex " + std::to_string(w) + " lies inside edge (" +
                           std::to_string(u) + "," + std::to_string(v) + ")"});
    }

  const auto& edges = g.edges();
  const int m = g.edge_count();
  // crossing point -> indices of edges through it, for triple-point detection
  std::map<Point, std::set<int>> through;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, e] = edges[j];
      auto rel =
          segment_relation(d.at(a), d.at(b), d.at(c), d.at(e));
      if (rel == SegmentRelation::CollinearOverlap)
        out.push_back({ViolationKind::OverlappingSegments,
                       "edges (" + std::to_string(a) + "," + std::to_string(b) +
                           ") and (" + std::to_string(c) + "," +
                           std::to_string(e) + ") overlap"});
      if (rel == SegmentRelation::ProperCrossing) {
        Point p = crossing_point(d.at(a), d.at(b), d.at(c), d.at(e));
        auto& through_p = through[p];
        through_p.insert(i);
        through_p.insert(j);
      }
    }
  for (const auto& [p, ids] : through)
    if (ids.size() >= 3)
      out.push_back({ViolationKind::TriplePoint,
                     std::to_string(ids.size()) +
                         " edges share an interior point"});
  return out;
}

/// Number of unordered pairs of non-adjacent edges whose open segments cross.
/// Adjacent edges (sharing an endpoint) are never counted. The count of one
/// explicit drawing is an upper bound on cr(G).
inline long long count_crossings(const Drawing& d) {
  auto violations = validate_drawing(d);
  if (!violations.empty())
    throw DegenerateDrawingError(std::string("degenerate drawing: ") +
                                 to_string(violations.front().kind) + ": " +
                                 violations.front().detail);
  const auto& edges = d.graph.edges();
  const int m = d.graph.edge_count();
  long long count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, e] = edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      if (segment_relation(d.at(a), d.at(b), d.at(c), d.at(e)) ==
          SegmentRelation::ProperCrossing)
        ++count;
    }
  return count;
}

}  // namespace crosslab
