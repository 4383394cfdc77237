#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "torusgraph/planarity.hpp"
#include "torusgraph/rational.hpp"
#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

/// Unit step on the grid, in counter-clockwise order.
enum class Dir : std::uint8_t { Right = 0, Up = 1, Left = 2, Down = 3 };

constexpr Dir rotate(Dir d, int turns) { return static_cast<Dir>((static_cast<int>(d) + 4 + turns % 4) % 4); }
constexpr Dir opposite(Dir d) { return rotate(d, 2); }
constexpr int dx(Dir d) { return d == Dir::Right ? 1 : (d == Dir::Left ? -1 : 0); }
constexpr int dy(Dir d) { return d == Dir::Up ? 1 : (d == Dir::Down ? -1 : 0); }

struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Discrete embedding on the n x n torus grid: vertices sit on lattice
/// points of (Z/n)^2 and each edge is a lattice path from its first
/// endpoint to its second along unit segments.
struct GridEmbedding {
  int n = 0;
  AbstractGraph graph;
  std::vector<GridPoint> positions;
  std::vector<std::vector<Dir>> paths;

  friend bool operator==(const GridEmbedding&, const GridEmbedding&) = default;

  GridPoint step(GridPoint p, Dir d) const { return {(p.x + dx(d) + n) % n, (p.y + dy(d) + n) % n}; }
  std::size_t point_id(GridPoint p) const { return static_cast<std::size_t>(p.y * n + p.x); }
  /// Horizontal segment (p, p+e1) has id 2*point(p); vertical (p, p+e2) 2*point(p)+1.
  std::size_t segment_id(GridPoint from, Dir d) const;

  /// Lift translation of an edge in torus units.
  LatticeVector lift(std::size_t edge) const;
  std::size_t total_segments() const;

  /// First broken invariant, if any: distinct in-range positions, paths that
  /// end at their endpoint, no shared segment, no path through a foreign
  /// point, simple paths.
  std::optional<std::string> violation() const;
  bool valid() const { return !violation(); }

  /// Exact conversion: vertex i becomes "v<i>" at position/n, edge j becomes
  /// "e<j>" with the lattice path scaled by 1/n.
  TorusGraph to_torus_graph(TorusKind kind = TorusKind::Standard) const;

  /// Byte string identifying the embedding exactly.
  std::string key() const;
};

enum class EnumerationStatus { Complete, Stopped, Truncated };

struct EnumerationOptions {
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Bound on the sum of path lengths. Unbounded by default.
  std::size_t max_total_segments = std::numeric_limits<std::size_t>::max();
};

/// Every valid grid embedding of `g` on the n x n torus grid, one per class
/// under grid translations: the representative puts the lowest vertex of the
/// first component at the origin. Loop paths are stored in the orientation
/// whose step sequence is lexicographically smaller than its reverse.
/// Edges are routed component by component in breadth-first order, so the
/// output order is deterministic. Visiting more than `limit` embeddings
/// stops with Truncated.
EnumerationStatus enumerate_grid_embeddings(const AbstractGraph& g, int n, const EnumerationOptions& options,
                                            const std::function<bool(const GridEmbedding&)>& visit);

std::vector<GridEmbedding> collect_grid_embeddings(const AbstractGraph& g, int n,
                                                   const EnumerationOptions& options = {},
                                                   EnumerationStatus* status = nullptr);

}  // namespace torusgraph
