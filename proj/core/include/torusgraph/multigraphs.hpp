#pragma once

#include <cstddef>
#include <vector>

#include "torusgraph/planarity.hpp"

namespace torusgraph {

/// Canonical labelling: the lexicographically least sorted edge list over
/// all vertex relabellings that list vertices by (degree, loops) ascending.
/// Two multigraphs are isomorphic iff their canonical forms are equal.
AbstractGraph canonical_form(const AbstractGraph& g);

/// Connected multigraphs (loops and parallel edges allowed) with between 0
/// and `max_edges` edges, one per isomorphism class, in canonical form.
/// Graphs with a vertex of degree above `max_degree` (a loop counts twice)
/// are omitted. Ordered by edge count, then vertex count, then edge list.
std::vector<AbstractGraph> connected_multigraphs(std::size_t max_edges, std::size_t max_degree);

}  // namespace torusgraph
