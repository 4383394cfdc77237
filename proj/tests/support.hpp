#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torusgraph/graph_file.hpp"
#include "torusgraph/grid_embedding.hpp"
#include "torusgraph/planarity.hpp"
#include "torusgraph/torus_graph.hpp"

namespace testing_support {

using namespace torusgraph;

inline Vec2 pt(const std::string& x, const std::string& y) { return {parse_rational(x), parse_rational(y)}; }

inline TorusPoint at(const std::string& x, const std::string& y) { return {parse_rational(x), parse_rational(y)}; }

inline std::string fixture_path(const std::string& name) { return std::string(TORUSGRAPH_FIXTURE_DIR) + "/" + name; }

inline TorusGraph fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_file(ss.str());
}

// Loop at a vertex placed at (x0, y0) running straight to (x0 + p, y0 + q).
inline TorusGraph straight_loop(long p, long q, TorusKind kind = TorusKind::Standard) {
  TorusGraph g(kind);
  g.add_vertex("a", at("0", "0"));
  g.add_edge("l", "a", "a", {pt("0", "0"), {Rational(Integer(p)), Rational(Integer(q))}});
  return g;
}

inline TorusGraph theta_in_disc() {
  TorusGraph g;
  g.add_vertex("a", at("1/4", "1/2"));
  g.add_vertex("b", at("3/4", "1/2"));
  g.add_edge("e1", "a", "b", {pt("1/4", "1/2"), pt("3/4", "1/2")});
  g.add_edge("e2", "a", "b", {pt("1/4", "1/2"), pt("1/2", "3/4"), pt("3/4", "1/2")});
  g.add_edge("e3", "a", "b", {pt("1/4", "1/2"), pt("1/2", "1/4"), pt("3/4", "1/2")});
  return g;
}

inline TorusGraph triangle_in_disc() {
  TorusGraph g;
  g.add_vertex("a", at("1/4", "1/4"));
  g.add_vertex("b", at("3/4", "1/4"));
  g.add_vertex("c", at("1/2", "3/4"));
  g.add_edge("ab", "a", "b", {pt("1/4", "1/4"), pt("3/4", "1/4")});
  g.add_edge("bc", "b", "c", {pt("3/4", "1/4"), pt("1/2", "3/4")});
  g.add_edge("ca", "c", "a", {pt("1/2", "3/4"), pt("1/4", "1/4")});
  return g;
}

// K4 drawn in a disc: triangle plus a centre vertex.
inline TorusGraph k4_in_disc() {
  TorusGraph g = triangle_in_disc();
  g.add_vertex("d", at("1/2", "3/8"));
  g.add_edge("ad", "a", "d", {pt("1/4", "1/4"), pt("1/2", "3/8")});
  g.add_edge("bd", "b", "d", {pt("3/4", "1/4"), pt("1/2", "3/8")});
  g.add_edge("cd", "c", "d", {pt("1/2", "3/4"), pt("1/2", "3/8")});
  return g;
}

// Loops of classes (1,0) and (0,1) at one vertex.
inline TorusGraph meridian_longitude_bouquet() {
  TorusGraph g;
  g.add_vertex("a", at("1/2", "1/2"));
  g.add_edge("lon", "a", "a", {pt("1/2", "1/2"), pt("3/2", "1/2")});
  g.add_edge("mer", "a", "a", {pt("1/2", "1/2"), pt("1/2", "3/2")});
  return g;
}

// Geometry-free stand-in: vertices spread along y=0 and straight edges.
// Fine for combinatorial routines; not a valid embedding in general.
inline TorusGraph combinatorial(const AbstractGraph& a) {
  TorusGraph g;
  const auto n = static_cast<long>(a.vertex_count);
  for (long i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), {Rational(Integer(i), Integer(n)), Rational(0)});
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    auto [u, v] = a.edges[k];
    Vec2 from = g.vertex(u).position.lift();
    Vec2 to = g.vertex(v).position.lift();
    if (u == v) to.x += 1;
    g.add_edge("e" + std::to_string(k), u, v, {from, to});
  }
  return g;
}

inline std::vector<Dir> steps(const std::string& s) {
  std::vector<Dir> out;
  for (char c : s) {
    switch (c) {
      case 'R': out.push_back(Dir::Right); break;
      case 'U': out.push_back(Dir::Up); break;
      case 'L': out.push_back(Dir::Left); break;
      case 'D': out.push_back(Dir::Down); break;
    }
  }
  return out;
}

inline std::string repeat(const std::string& s, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += s;
  return out;
}

/// Two disjoint (1,1) loops on the 4 x 4 grid.
inline GridEmbedding hopf_4x4() {
  return {4, {2, {{0, 0}, {1, 1}}}, {{0, 0}, {2, 0}}, {steps(repeat("RU", 4)), steps(repeat("RU", 4))}};
}

/// The (2,3) line on the 5 x 5 grid, cut into a triangle at steps 0, 8, 16.
inline GridEmbedding trefoil_5x5() {
  const auto path = steps(repeat("RRUUU", 5));
  GridEmbedding e{5, {3, {{0, 1}, {1, 2}, {2, 0}}}, {}, {}};
  const std::size_t cuts[] = {0, 8, 16, 25};
  GridPoint at{0, 0};
  for (int k = 0; k < 3; ++k) {
    e.positions.push_back(at);
    std::vector<Dir> piece(path.begin() + cuts[k], path.begin() + cuts[k + 1]);
    for (auto d : piece) at = e.step(at, d);
    e.paths.push_back(piece);
  }
  return e;
}

}  // namespace testing_support
