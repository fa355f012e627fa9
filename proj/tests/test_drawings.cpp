#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "crosslab/drawing.hpp"
#include "crosslab/generators.hpp"
#include "crosslab/io.hpp"
#include "crosslab/planarity.hpp"

using namespace crosslab;

namespace {

Drawing k4_inner() {
  // one vertex inside the triangle: planar straight-line embedding
  return Drawing(complete_graph(4),
                 {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(2)},
                  {Rat(1), Rat(1)}});
}

Drawing k4_square() {
  return Drawing(complete_graph(4),
                 {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)},
                  {Rat(0), Rat(1)}});
}

// convex position on a parabola: y = x^2
Drawing on_parabola(Graph g) {
  std::vector<Point> pts;
  for (int v = 0; v < g.vertex_count(); ++v)
    pts.push_back({Rat(v), Rat(v) * Rat(v)});
  return Drawing(std::move(g), std::move(pts));
}

}  // namespace

TEST_CASE("count_crossings on reference drawings") {
  CHECK(count_crossings(grid(5)) == 0);
  CHECK(count_crossings(k4_inner()) == 0);
  CHECK(count_crossings(k4_square()) == 1);  // the two diagonals
}

TEST_CASE("stored planar drawings for the planar corpus") {
  for (int n = 2; n <= 5; ++n) CHECK(count_crossings(grid(n)) == 0);
  CHECK(count_crossings(on_parabola(path_graph(6))) == 0);
  CHECK(count_crossings(on_parabola(cycle_graph(7))) == 0);
  // star: center at origin, leaves on a horizontal line
  Graph star = star_graph(8);
  std::vector<Point> pts{{Rat(0), Rat(0)}};
  for (int v = 1; v < 8; ++v) pts.push_back({Rat(v), Rat(1)});
  CHECK(count_crossings(Drawing(star, std::move(pts))) == 0);
}

TEST_CASE("convex complete graphs cross in quadruples") {
  // every 4 vertices in convex position contribute exactly one crossing
  CHECK(count_crossings(on_parabola(complete_graph(4))) == 1);
  CHECK(count_crossings(on_parabola(complete_graph(5))) == 5);
  CHECK(count_crossings(on_parabola(complete_graph(6))) == 15);
}

TEST_CASE("validate_drawing violations") {
  CHECK(validate_drawing(grid(3)).empty());

  Graph pair = from_edge_list({{0, 1}}, 3);
  Drawing coincident(pair,
                     {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
  auto v1 = validate_drawing(coincident);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1.front().kind == ViolationKind::CoincidentVertices);

  // vertex 2 sits in the interior of edge (0,1)
  Graph path = path_graph(3);
  Drawing on_edge(path, {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(0)}});
  bool saw_vertex_on_edge = false;
  for (const auto& v : validate_drawing(on_edge))
    saw_vertex_on_edge |= v.kind == ViolationKind::VertexOnEdge;
  CHECK(saw_vertex_on_edge);

  // three segments through the origin
  Graph three = from_edge_list({{0, 1}, {2, 3}, {4, 5}});
  Drawing triple(three, {{Rat(-1), Rat(0)},
                         {Rat(1), Rat(0)},
                         {Rat(0), Rat(-1)},
                         {Rat(0), Rat(1)},
                         {Rat(-1), Rat(-1)},
                         {Rat(1), Rat(1)}});
  bool saw_triple = false;
  for (const auto& v : validate_drawing(triple))
    saw_triple |= v.kind == ViolationKind::TriplePoint;
  CHECK(saw_triple);
  CHECK_THROWS_AS(count_crossings(triple), DegenerateDrawingError);

  // collinear overlapping edges
  Graph two = from_edge_list({{0, 1}, {2, 3}});
  Drawing overlap(two, {{Rat(0), Rat(0)},
                        {Rat(3), Rat(0)},
                        {Rat(1), Rat(0)},
                        {Rat(4), Rat(0)}});
  bool saw_overlap = false;
  for (const auto& v : validate_drawing(overlap))
    saw_overlap |= v.kind == ViolationKind::OverlappingSegments;
  CHECK(saw_overlap);
  CHECK_THROWS_AS(count_crossings(overlap), DegenerateDrawingError);
}

TEST_CASE("crossing count is affine invariant") {
  std::mt19937_64 eng(7);
  auto transformed = [&](const Drawing& d, Rat a, Rat b, Rat c, Rat dd, Rat tx,
                         Rat ty) {
    std::vector<Point> pts;
    for (const auto& p : d.coordinates)
      pts.push_back({a * p.x + b * p.y + tx, c * p.x + dd * p.y + ty});
    return Drawing(d.graph, std::move(pts));
  };
  for (const Drawing& base :
       {grid(4), k4_square(), on_parabola(complete_graph(5))}) {
    long long want = count_crossings(base);
    for (int trial = 0; trial < 8; ++trial) {
      // random integer matrix with positive determinant
      long long a, b, c, d;
      do {
        a = static_cast<long long>(eng() % 7) - 3;
        b = static_cast<long long>(eng() % 7) - 3;
        c = static_cast<long long>(eng() % 7) - 3;
        d = static_cast<long long>(eng() % 7) - 3;
      } while (a * d - b * c <= 0);
      Rat tx(static_cast<long long>(eng() % 11) - 5);
      Rat ty(static_cast<long long>(eng() % 11) - 5);
      CHECK(count_crossings(transformed(base, Rat(a), Rat(b), Rat(c), Rat(d),
                                        tx, ty)) == want);
    }
  }
}

TEST_CASE("planarity agrees with zero-crossing drawings") {
  CHECK(is_planar(grid(5).graph));
  CHECK(is_planar(k4_inner().graph));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
}

TEST_CASE("coordinate files round-trip") {
  Drawing d = grid(3);
  // perturb to exercise rationals
  d.coordinates[4] = {Rat(1, 3), Rat(7, 5)};
  std::ostringstream out;
  write_coordinates(out, d);
  std::istringstream in(out.str());
  Drawing back = read_coordinates(in, d.graph);
  for (int v = 0; v < d.graph.vertex_count(); ++v)
    CHECK(back.at(v) == d.at(v));

  std::istringstream bad("0 1 2\n1 x 3\n");
  CHECK_THROWS_AS(read_coordinates(bad, path_graph(2)), ParseError);
  std::istringstream missing("0 0 0\n");
  CHECK_THROWS_AS(read_coordinates(missing, path_graph(2)), ParseError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(format_rational(Rat(6, 4)) == "3/2");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
