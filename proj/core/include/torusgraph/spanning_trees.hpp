#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace torusgraph {

using EndpointPair = std::pair<std::size_t, std::size_t>;

enum class TreeScanStatus { Complete, Stopped, CapExceeded };

inline constexpr std::size_t kDefaultTreeCap = 100'000;

/// Enumerates every maximal spanning forest of a multigraph by reverse
/// search over edge exchanges (Avis-Fukuda). The root is the greedy forest
/// taking edges in index order; the parent of a forest T swaps in the
/// smallest root edge f missing from T and drops the smallest non-root edge
/// on the cycle that f closes. Loops never appear in a forest.
///
/// `visit` receives the ascending edge indices of each forest and returns
/// false to stop. At most `cap` forests are visited.
TreeScanStatus enumerate_spanning_trees(std::size_t vertex_count, std::span<const EndpointPair> edges,
                                        std::size_t cap,
                                        const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace torusgraph
