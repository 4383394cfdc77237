#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusgraph/rational.hpp"

namespace torusgraph {

/// Raised for malformed input: dangling ids, bad polylines, endpoint
/// mismatches. Distinct from a crossing reported by validate_embedding().
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How the carrier torus sits in S^3. A knotted torus carries a nontrivial
/// companion knot; nothing about the companion is stored.
enum class TorusKind { Standard, NonstandardKnotted };

/// Fundamental-domain coordinates, 0 <= x, y < 1.
struct TorusPoint {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

  Vec2 lift() const { return {x, y}; }
  static bool in_domain(const Rational& c) { return c >= 0 && c < 1; }
};

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
  std::string id;
  TorusPoint position;
};

/// f(e) as a polyline in the universal cover: starts at coords(u), ends at
/// coords(v) + t for an integer vector t.
struct EdgeGeometry {
  std::string id;
  VertexIndex u = 0;
  VertexIndex v = 0;
  std::vector<Vec2> polyline;

  bool is_loop() const { return u == v; }
};

/// An abstract multigraph together with its embedding on the torus.
/// Loops and multi-edges are allowed.
class TorusGraph {
 public:
  TorusGraph() = default;
  explicit TorusGraph(TorusKind kind) : kind_(kind) {}

  TorusKind torus() const { return kind_; }
  void set_torus(TorusKind kind) { kind_ = kind; }

  /// Throws StructuralError on duplicate ids or coordinates outside [0,1).
  VertexIndex add_vertex(std::string id, TorusPoint p);
  /// Throws StructuralError on duplicate edge ids or unknown endpoints.
  /// Geometry is checked by check_structure().
  EdgeIndex add_edge(std::string id, const std::string& u, const std::string& v,
                     std::vector<Vec2> polyline);
  EdgeIndex add_edge(std::string id, VertexIndex u, VertexIndex v, std::vector<Vec2> polyline);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexIndex i) const { return vertices_.at(i); }
  const EdgeGeometry& edge(EdgeIndex i) const { return edges_.at(i); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeGeometry>& edges() const { return edges_; }

  std::optional<VertexIndex> find_vertex(const std::string& id) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  /// Edge indices incident to each vertex; a loop is listed twice.
  std::vector<std::vector<EdgeIndex>> incidence() const;

  friend bool operator==(const TorusGraph& a, const TorusGraph& b);

 private:
  TorusKind kind_ = TorusKind::Standard;
  std::vector<Vertex> vertices_;
  std::vector<EdgeGeometry> edges_;
  std::map<std::string, VertexIndex> vertex_ids_;
  std::map<std::string, EdgeIndex> edge_ids_;
};

bool operator==(const Vertex& a, const Vertex& b);
bool operator==(const EdgeGeometry& a, const EdgeGeometry& b);

struct Violation {
  std::string edge_a;
  std::string edge_b;  // equal to edge_a for self-intersections; a vertex id for vertex contacts
  Vec2 point;          // intersection point on edge_a's polyline
  LatticeVector translate;  // applied to edge_b before intersecting
  bool vertex_contact = false;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Throws StructuralError if some polyline has fewer than two points,
/// repeats consecutive points, or does not start at coords(u) and end at
/// coords(v) plus an integer vector.
void check_structure(const TorusGraph& g);

/// Exact check that the geometry is an embedding: edges meet only at common
/// endpoint vertices, under every Z^2 translate that can matter, and no edge
/// runs through a vertex other than its own endpoints. Violations are sorted
/// by edge index pair.
ValidationReport validate_embedding(const TorusGraph& g);

/// Lift translation of an edge: last polyline point minus coords(v).
LatticeVector edge_class(const TorusGraph& g, EdgeIndex e);

/// Connected components, ordered by their lowest vertex index. Isolated
/// vertices form singleton components; ids and geometry are preserved.
std::vector<TorusGraph> components(const TorusGraph& g);

/// Component label per vertex, numbered in order of lowest vertex index.
std::vector<std::size_t> component_labels(const TorusGraph& g);

}  // namespace torusgraph
