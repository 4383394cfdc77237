#pragma once

#include <string>

#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

/// The unit-square fundamental domain with each edge cut where it crosses the
/// square's sides and every piece translated back inside. Output depends only
/// on the graph.
std::string render_diagram(const TorusGraph& g);

}  // namespace torusgraph
