#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "torusgraph/spanning_trees.hpp"

using namespace torusgraph;

namespace {

// Matrix-tree theorem: any cofactor of the Laplacian, by fraction-free
// Bareiss elimination. Loops do not contribute.
long long kirchhoff(std::size_t n, const std::vector<EndpointPair>& edges) {
  if (n <= 1) return 1;
  std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    ++lap[u][u];
    ++lap[v][v];
    --lap[u][v];
    --lap[v][u];
  }
  const std::size_t m = n - 1;
  std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = lap[i + 1][j + 1];
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

std::vector<std::vector<std::size_t>> all_trees(std::size_t n, const std::vector<EndpointPair>& edges,
                                                std::size_t cap = kDefaultTreeCap,
                                                TreeScanStatus* status = nullptr) {
  std::vector<std::vector<std::size_t>> out;
  auto s = enumerate_spanning_trees(n, edges, cap, [&](const std::vector<std::size_t>& t) {
    out.push_back(t);
    return true;
  });
  if (status) *status = s;
  return out;
}

bool is_spanning_forest(std::size_t n, const std::vector<EndpointPair>& edges, const std::vector<std::size_t>& t,
                        std::size_t components) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (auto e : t) {
    auto a = find(edges[e].first), b = find(edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return t.size() + components == n;
}

std::vector<EndpointPair> complete(std::size_t n) {
  std::vector<EndpointPair> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return e;
}

}  // namespace

TEST(SpanningTrees, CayleyCounts) {
  for (std::size_t n = 1; n <= 6; ++n) {
    long long expected = 1;
    for (std::size_t k = 0; k + 2 < n; ++k) expected *= static_cast<long long>(n);
    EXPECT_EQ(static_cast<long long>(all_trees(n, complete(n)).size()), expected) << n;
  }
}

TEST(SpanningTrees, ParallelEdgesAndLoops) {
  std::vector<EndpointPair> theta{{0, 1}, {0, 1}, {0, 1}, {1, 1}};
  auto trees = all_trees(2, theta);
  EXPECT_EQ(trees.size(), 3u);
  std::set<std::vector<std::size_t>> unique(trees.begin(), trees.end());
  EXPECT_EQ(unique, (std::set<std::vector<std::size_t>>{{0}, {1}, {2}}));
}

TEST(SpanningTrees, MatchesKirchhoffOnRandomConnectedMultigraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 7);
    const auto n = nv(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<EndpointPair> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    std::uniform_int_distribution<std::size_t> extra(0, 8);
    for (auto k = extra(rng); k > 0; --k) edges.emplace_back(pick(rng), pick(rng));
    std::shuffle(edges.begin(), edges.end(), rng);
    auto trees = all_trees(n, edges);
    EXPECT_EQ(static_cast<long long>(trees.size()), kirchhoff(n, edges)) << "trial " << trial;
    std::set<std::vector<std::size_t>> unique(trees.begin(), trees.end());
    EXPECT_EQ(unique.size(), trees.size());
    for (const auto& t : trees) EXPECT_TRUE(is_spanning_forest(n, edges, t, 1));
  }
}

TEST(SpanningTrees, ForestsMultiplyAcrossComponents) {
  // Triangle plus a disjoint double edge: 3 * 2 maximal forests.
  std::vector<EndpointPair> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 4}};
  auto trees = all_trees(5, edges);
  EXPECT_EQ(trees.size(), 6u);
  for (const auto& t : trees) EXPECT_TRUE(is_spanning_forest(5, edges, t, 2));
}

TEST(SpanningTrees, CapAndStop) {
  TreeScanStatus status;
  auto trees = all_trees(6, complete(6), 100, &status);
  EXPECT_EQ(status, TreeScanStatus::CapExceeded);
  EXPECT_EQ(trees.size(), 100u);
  auto s = enumerate_spanning_trees(4, complete(4), 100, [](const std::vector<std::size_t>&) { return false; });
  EXPECT_EQ(s, TreeScanStatus::Stopped);
}
