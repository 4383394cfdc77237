#pragma once

#include <cstddef>
#include <vector>

#include "torusgraph/spanning_trees.hpp"
#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

/// A multigraph without geometry. Loops and parallel edges are kept.
struct AbstractGraph {
  std::size_t vertex_count = 0;
  std::vector<EndpointPair> edges;

  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;

  static AbstractGraph from(const TorusGraph& g);
  static AbstractGraph complete(std::size_t n);
  static AbstractGraph complete_bipartite(std::size_t a, std::size_t b);
  /// Two vertices joined by n parallel edges.
  static AbstractGraph theta(std::size_t n);
};

/// Drops loops and collapses parallel edges. Surviving edges are stored
/// with the smaller endpoint first, sorted.
AbstractGraph simplify_graph(const AbstractGraph& g);

enum class NonplanarityKind {
  None,
  EdgeBound,       // simple graph with |E| > 3|V| - 6
  K5Subdivision,
  K33Subdivision,
};

struct PlanarityResult {
  bool planar = true;
  NonplanarityKind kind = NonplanarityKind::None;
  /// Edges of the Kuratowski subdivision, as endpoint pairs of the simplified
  /// graph. Empty for EdgeBound rejections.
  std::vector<EndpointPair> certificate;
};

/// Boyer-Myrvold planarity test on the simplified graph, preceded by the
/// Euler edge-count bound. Nonplanar results carry a certificate.
PlanarityResult is_planar(const AbstractGraph& g);

/// Boyer-Myrvold alone, without the edge-count shortcut.
PlanarityResult is_planar_unpruned(const AbstractGraph& g);

/// True if `edges` is a subdivision of K5 or K3,3 inside `g`.
bool verify_kuratowski(const AbstractGraph& g, const std::vector<EndpointPair>& edges);

const char* to_string(NonplanarityKind k);

}  // namespace torusgraph
