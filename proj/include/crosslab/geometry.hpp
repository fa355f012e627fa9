#pragma once

#include <utility>

#include "crosslab/rational.hpp"

namespace crosslab {

struct Point {
  Rat x, y;

  bool operator==(const Point& other) const {
    return x == other.x && y == other.y;
  }
  bool operator<(const Point& other) const {
    if (x != other.x) return x < other.x;
    return y < other.y;
  }
};

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
/// 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == 0;
}

/// p lies strictly inside segment ab (collinear and strictly between).
inline bool point_in_open_segment(const Point& p, const Point& a,
                                  const Point& b) {
  if (!collinear(a, b, p)) return false;
  if (a.x != b.x) return (a.x < p.x) != (b.x < p.x) && p.x != a.x && p.x != b.x;
  return (a.y < p.y) != (b.y < p.y) && p.y != a.y && p.y != b.y;
}

/// p lies on the closed segment ab, assuming p is collinear with a and b.
inline bool point_on_closed_collinear(const Point& p, const Point& a,
                                      const Point& b) {
  if (a.x != b.x)
    return (p.x >= a.x && p.x <= b.x) || (p.x >= b.x && p.x <= a.x);
  return (p.y >= a.y && p.y <= b.y) || (p.y >= b.y && p.y <= a.y);
}

enum class SegmentRelation {
  Disjoint,
  ProperCrossing,   // interiors cross transversally in one point
  Touching,         // share a single point that is an endpoint of >= 1 segment
  CollinearOverlap  // collinear with a common subsegment
};

/// Classifies closed segments ab and cd. Degenerate (zero-length) segments
/// are not expected here; callers validate drawings first.
inline SegmentRelation segment_relation(const Point& a, const Point& b,
                                        const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return SegmentRelation::ProperCrossing;

  if (o1 == 0 && o2 == 0) {
    // all four points collinear: overlap iff some endpoint is interior, or
    // the segments coincide
    if (point_in_open_segment(c, a, b) || point_in_open_segment(d, a, b) ||
        point_in_open_segment(a, c, d) || point_in_open_segment(b, c, d) ||
        (a == c && b == d) || (a == d && b == c))
      return SegmentRelation::CollinearOverlap;
    if (a == c || a == d || b == c || b == d) return SegmentRelation::Touching;
    return SegmentRelation::Disjoint;
  }

  // non-collinear touching: an endpoint lies on the other closed segment
  bool touch = (o1 == 0 && point_on_closed_collinear(c, a, b)) ||
               (o2 == 0 && point_on_closed_collinear(d, a, b)) ||
               (o3 == 0 && point_on_closed_collinear(a, c, d)) ||
               (o4 == 0 && point_on_closed_collinear(b, c, d));
  if (touch) return SegmentRelation::Touching;
  return SegmentRelation::Disjoint;
}

/// Intersection point of two properly crossing segments.
inline Point crossing_point(const Point& a, const Point& b, const Point& c,
                            const Point& d) {
  Rat rx = b.x - a.x, ry = b.y - a.y;
  Rat sx = d.x - c.x, sy = d.y - c.y;
  Rat denom = rx * sy - ry * sx;
  Rat t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return {a.x + t * rx, a.y + t * ry};
}

}  // namespace crosslab
