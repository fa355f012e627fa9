#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crosslab/drawing.hpp"
#include "crosslab/graph.hpp"
#include "crosslab/rational.hpp"

namespace crosslab {

/// Edge-list text format: one "u v" pair per line, '#' starts a comment
/// line, and an optional "n <count>" header forces the vertex count.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<int> forced_n;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "n") {
      long long count = -1;
      if (!(ls >> count) || count < 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed vertex-count header");
      forced_n = static_cast<int>(count);
      continue;
    }
    long long u, v;
    std::istringstream es(line);
    if (!(es >> u >> v) || u < 0 || v < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two nonnegative vertex ids, got: " + line);
    std::string trailing;
    if (es >> trailing)
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing content: " + trailing);
    if (u == v) throw SelfLoopError(static_cast<int>(u));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return from_edge_list(edges, forced_n);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list: " + path);
  write_edge_list(out, g);
}

/// Coordinate format: one "id x y" line per vertex, x and y rationals
/// written as "p/q" or plain integers.
inline Drawing read_coordinates(std::istream& in, const Graph& g) {
  std::vector<Point> coords(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long id;
    std::string xs, ys;
    if (!(ls >> id >> xs >> ys))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'id x y'");
    if (id < 0 || id >= g.vertex_count())
      throw InvalidVertexError("coordinate line " + std::to_string(line_no) +
                               ": vertex " + std::to_string(id) +
                               " out of range");
    coords[id] = {parse_rational(xs), parse_rational(ys)};
    seen[id] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v])
      throw ParseError("no coordinates for vertex " + std::to_string(v));
  return Drawing(g, std::move(coords));
}

inline Drawing read_coordinates_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coordinate file: " + path);
  return read_coordinates(in, g);
}

inline void write_coordinates(std::ostream& out, const Drawing& d) {
  for (int v = 0; v < d.graph.vertex_count(); ++v)
    out << v << " " << format_rational(d.at(v).x) << " "
        << format_rational(d.at(v).y) << "\n";
}

inline void write_coordinates_file(const std::string& path, const Drawing& d) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write coordinate file: " + path);
  write_coordinates(out, d);
}

}  // namespace crosslab
