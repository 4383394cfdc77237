#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "torusgraph/homology.hpp"
#include "torusgraph/planarity.hpp"
#include "torusgraph/spanning_trees.hpp"
#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

enum class KnotStatus { Unknot, NontrivialTorusKnot, NontrivialSatellite };

struct KnotVerdict {
  KnotStatus status = KnotStatus::Unknot;
  HomologyClass cls;

  bool knotted() const { return status != KnotStatus::Unknot; }
  friend bool operator==(const KnotVerdict&, const KnotVerdict&) = default;
};

/// Knot type of a simple closed curve of class `a` on a torus of the given
/// kind.
///
/// On the standard torus the unknots are exactly the classes (0,0), (0,1),
/// (1,0), (1,n) and (n,1), up to sign; everything else is a nontrivial torus
/// knot. On a knotted torus a curve is unknotted iff it has no longitudinal
/// winding (p = 0); otherwise it is a satellite of the companion.
///
/// Throws StructuralError for nonzero classes with gcd > 1, which no simple
/// closed curve realises.
KnotVerdict knot_type(HomologyClass a, TorusKind kind);

struct KnotWitness {
  Cycle cycle;
  KnotVerdict verdict;
};

struct KnotSearch {
  ScanStatus status = ScanStatus::Complete;
  std::optional<KnotWitness> witness;
  std::size_t cycles_scanned = 0;
};

/// First simple cycle in enumeration order whose knot type is nontrivial.
KnotSearch find_knotted_cycle(const TorusGraph& g, std::size_t cap = kDefaultCycleCap);

struct LinkWitness {
  std::array<Cycle, 2> cycles;
  std::array<HomologyClass, 2> classes;
};

struct LinkSearch {
  ScanStatus status = ScanStatus::Complete;
  std::optional<LinkWitness> witness;
  std::size_t cycles_scanned = 0;
  std::size_t pairs_checked = 0;
};

/// Vertex-disjoint pair of simple cycles whose classes are essential and
/// neither a meridian nor a longitude. Such a pair winds around both
/// directions of the standard torus and cannot be split. Requires a standard
/// torus (on a knotted torus a knot witness always comes first); throws
/// StructuralError otherwise.
LinkSearch find_nonsplit_link(const TorusGraph& g, std::size_t cap = kDefaultCycleCap);

/// f(G)/f(T): the single vertex left after contracting a spanning tree,
/// with one loop per fundamental cycle.
struct Bouquet {
  VertexIndex base = 0;
  std::vector<HomologyClass> loop_classes;
};

/// Throws StructuralError when `g` is disconnected or `t` does not span it.
Bouquet contract_to_bouquet(const TorusGraph& g, const SpanningTree& t);

/// A bouquet on the torus is trivial iff none of its loops is knotted.
bool is_bouquet_trivial(const Bouquet& b, TorusKind kind);

enum class Tristate { True, False, Indeterminate };

struct PrimitivityResult {
  Tristate value = Tristate::True;
  std::size_t trees_checked = 0;
  /// Spanning tree whose bouquet is nontrivial, when value is False.
  std::optional<SpanningTree> counterexample;
};

/// Contracts every spanning tree of every component and checks that each
/// resulting bouquet is trivial. Indeterminate if some component has more
/// than `tree_cap` spanning trees.
PrimitivityResult is_primitive(const TorusGraph& g, std::size_t tree_cap = kDefaultTreeCap);

/// Freeness of f restricted to every connected subgraph. Equivalent to
/// primitivity, which is how it is computed; no fundamental group is built.
PrimitivityResult is_free_family(const TorusGraph& g, std::size_t tree_cap = kDefaultTreeCap);

enum class VerdictResult { Trivial, Nontrivial, Indeterminate };

enum class Reason { NonplanarAbstractGraph, KnottedCycle, NonsplitLink, ScanIncomplete };

struct ScanStats {
  std::size_t knot_cycles_scanned = 0;
  std::size_t link_cycles_scanned = 0;
  std::size_t link_pairs_checked = 0;
  bool knot_scan_complete = true;
  bool link_scan_complete = true;
  bool link_scan_skipped = false;
};

struct Verdict {
  VerdictResult result = VerdictResult::Trivial;
  std::vector<Reason> reasons;
  std::optional<KnotWitness> knot;
  std::optional<LinkWitness> link;
  std::optional<PlanarityResult> nonplanarity;
  ScanStats stats;

  bool has(Reason r) const;
};

struct ClassifyOptions {
  std::size_t cycle_cap = kDefaultCycleCap;
  /// Run validate_embedding() first and throw StructuralError on failure.
  bool validate = true;
};

/// Trivial iff the abstract graph is planar and the graph holds neither a
/// nontrivial knot nor a nonsplit link. Every applicable reason is collected,
/// in the order planarity, knots, links.
Verdict classify(const TorusGraph& g, const ClassifyOptions& options = {});

/// Two vertices, no loops, every edge joining them.
bool is_theta_graph(const TorusGraph& g);

const char* to_string(KnotStatus s);
const char* to_string(VerdictResult r);
const char* to_string(Reason r);

}  // namespace torusgraph
