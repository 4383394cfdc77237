#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

/// Homology class (p, q) of a closed curve on the torus: p is the
/// longitudinal winding, q the meridional winding. The meridian is (0,1)
/// and the longitude (1,0). T(p,q) in torus-knot notation.
struct HomologyClass {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
  friend HomologyClass operator+(HomologyClass a, HomologyClass b) { return {a.p + b.p, a.q + b.q}; }
  friend HomologyClass operator-(HomologyClass a, HomologyClass b) { return {a.p - b.p, a.q - b.q}; }
  friend HomologyClass operator-(HomologyClass a) { return {-a.p, -a.q}; }

  bool essential() const { return p != 0 || q != 0; }
  static HomologyClass from(LatticeVector t) { return {t.x, t.y}; }
};

inline std::ostream& operator<<(std::ostream& os, const HomologyClass& h) {
  return os << '(' << h.p << ',' << h.q << ')';
}

/// One traversed edge of a cycle. `forward` means u -> v.
struct CycleStep {
  EdgeIndex edge = 0;
  bool forward = true;

  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// Closed, vertex-simple walk starting and ending at `base`.
struct Cycle {
  VertexIndex base = 0;
  std::vector<CycleStep> steps;

  friend bool operator==(const Cycle&, const Cycle&) = default;

  /// Vertices in traversal order, base first, without the closing repeat.
  std::vector<VertexIndex> vertices(const TorusGraph& g) const;
  Cycle reversed(const TorusGraph& g) const;
};

/// Spanning forest: tree edges (ascending) and one root per component.
struct SpanningTree {
  std::vector<EdgeIndex> edges;
  std::vector<VertexIndex> roots;

  bool contains(EdgeIndex e) const;
};

/// Breadth-first from the lowest vertex index of each component, incident
/// edges scanned in edge-index order.
SpanningTree spanning_tree(const TorusGraph& g);

/// Throws StructuralError if `t` is not a spanning forest of `g`.
void check_spanning_tree(const TorusGraph& g, const SpanningTree& t);

/// One cycle per non-tree edge e = (u,v): e forward, then the tree path
/// from v back to u. Ordered by edge index.
std::vector<Cycle> fundamental_cycles(const TorusGraph& g, const SpanningTree& t);

/// Signed sum of edge lift vectors along the cycle. Throws StructuralError
/// if `c` is not a closed vertex-simple walk in `g`.
HomologyClass cycle_class(const TorusGraph& g, const Cycle& c);

void check_cycle(const TorusGraph& g, const Cycle& c);

enum class ScanStatus {
  Complete,     // every cycle visited
  Stopped,      // the visitor asked to stop
  CapExceeded,  // more than `cap` cycles exist; the scan is incomplete
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Visits every vertex-simple cycle exactly once, up to rotation and
/// reversal. Cycles are rooted at their lowest vertex and found by DFS with
/// neighbours in edge-index order, so the order is deterministic. Loops are
/// cycles of length one; two parallel edges form a cycle of length two.
ScanStatus enumerate_simple_cycles(const TorusGraph& g, std::size_t cap,
                                   const std::function<bool(const Cycle&)>& visit);

/// p q' - q p'. Algebraic intersection number of curves in classes a and b.
constexpr std::int64_t intersection_det(HomologyClass a, HomologyClass b) {
  return a.p * b.q - a.q * b.p;
}

struct PrimitiveReduction {
  std::int64_t gcd = 0;
  HomologyClass unit;

  friend bool operator==(const PrimitiveReduction&, const PrimitiveReduction&) = default;
};

/// gcd(|p|,|q|) (gcd(0,0) = 0) and the reduced class, normalised so that
/// p > 0, or p = 0 and q > 0.
PrimitiveReduction primitive_reduce(HomologyClass a);

/// (0,0) or gcd 1.
bool is_zero_or_primitive(HomologyClass a);

}  // namespace torusgraph
