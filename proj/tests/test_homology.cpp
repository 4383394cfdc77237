#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "torusgraph/homology.hpp"

using namespace torusgraph;
using namespace testing_support;

namespace {

// Counts edge subsets that form one connected 2-regular subgraph.
std::size_t brute_force_cycle_count(const AbstractGraph& a) {
  const std::size_t m = a.edges.size();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(a.vertex_count, 0);
    std::vector<std::size_t> parent(a.vertex_count);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      auto [u, v] = a.edges[e];
      ++deg[u];
      ++deg[v];
      parent[find(u)] = find(v);
    }
    bool ok = true;
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < a.vertex_count; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      roots.insert(find(v));
    }
    if (ok && roots.size() == 1) ++count;
  }
  return count;
}

std::size_t count_cycles(const TorusGraph& g) {
  std::size_t n = 0;
  enumerate_simple_cycles(g, kDefaultCycleCap, [&](const Cycle& c) {
    check_cycle(g, c);
    ++n;
    return true;
  });
  return n;
}

AbstractGraph random_multigraph(std::mt19937& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices), ne(0, max_edges);
  AbstractGraph a{nv(rng), {}};
  std::uniform_int_distribution<std::size_t> pick(0, a.vertex_count - 1);
  const auto m = ne(rng);
  for (std::size_t i = 0; i < m; ++i) a.edges.emplace_back(pick(rng), pick(rng));
  return a;
}

}  // namespace

TEST(HomologyClass, IntersectionDetExamples) {
  EXPECT_EQ(intersection_det({1, 2}, {1, 3}), 1);
  EXPECT_EQ(intersection_det({0, 1}, {1, 0}), -1);
  EXPECT_EQ(intersection_det({5, -7}, {5, -7}), 0);
}

TEST(HomologyClass, PrimitiveReduceExamples) {
  EXPECT_EQ(primitive_reduce({4, 6}), (PrimitiveReduction{2, {2, 3}}));
  EXPECT_EQ(primitive_reduce({0, 0}), (PrimitiveReduction{0, {0, 0}}));
  EXPECT_EQ(primitive_reduce({-1, 2}), (PrimitiveReduction{1, {1, -2}}));
  EXPECT_EQ(primitive_reduce({0, -3}), (PrimitiveReduction{3, {0, 1}}));
  EXPECT_TRUE(is_zero_or_primitive({0, 0}));
  EXPECT_TRUE(is_zero_or_primitive({2, 3}));
  EXPECT_FALSE(is_zero_or_primitive({2, 4}));
}

TEST(SpanningTree, TriangleTakesTheEdgesAtTheLowestVertex) {
  TorusGraph g = combinatorial({3, {{0, 1}, {0, 2}, {1, 2}}});
  EXPECT_EQ(spanning_tree(g).edges, (std::vector<EdgeIndex>{0, 1}));
  // Breadth-first order, not edge order, decides: here e1 joins b and c.
  TorusGraph h = triangle_in_disc();
  EXPECT_EQ(spanning_tree(h).edges, (std::vector<EdgeIndex>{0, 2}));
}

TEST(SpanningTree, ThetaAndPath) {
  EXPECT_EQ(spanning_tree(theta_in_disc()).edges, (std::vector<EdgeIndex>{0}));
  TorusGraph path = combinatorial({4, {{0, 1}, {1, 2}, {2, 3}}});
  EXPECT_EQ(spanning_tree(path).edges, (std::vector<EdgeIndex>{0, 1, 2}));
}

TEST(SpanningTree, ForestHasOneRootPerComponent) {
  auto t = spanning_tree(fixture("hopf-pair.tg"));
  EXPECT_TRUE(t.edges.empty());
  EXPECT_EQ(t.roots, (std::vector<VertexIndex>{0, 1}));
}

TEST(SpanningTree, CheckRejectsCyclesAndShortForests) {
  auto g = theta_in_disc();
  EXPECT_THROW(check_spanning_tree(g, {{0, 1}, {0}}), StructuralError);
  EXPECT_THROW(check_spanning_tree(g, {{}, {0}}), StructuralError);
  EXPECT_NO_THROW(check_spanning_tree(g, {{2}, {0}}));
}

TEST(FundamentalCycles, Theta) {
  auto g = theta_in_disc();
  auto cycles = fundamental_cycles(g, {{0}, {0}});
  ASSERT_EQ(cycles.size(), 2u);
  std::set<std::set<EdgeIndex>> edge_sets;
  for (const auto& c : cycles) {
    check_cycle(g, c);
    std::set<EdgeIndex> s;
    for (auto st : c.steps) s.insert(st.edge);
    edge_sets.insert(s);
  }
  EXPECT_EQ(edge_sets, (std::set<std::set<EdgeIndex>>{{0, 1}, {0, 2}}));
}

TEST(FundamentalCycles, TreeGivesNoCycles) {
  TorusGraph path = combinatorial({3, {{0, 1}, {1, 2}}});
  EXPECT_TRUE(fundamental_cycles(path, spanning_tree(path)).empty());
}

TEST(FundamentalCycles, K4HasCircuitRankThree) {
  auto g = k4_in_disc();
  EXPECT_EQ(fundamental_cycles(g, spanning_tree(g)).size(), 3u);
}

TEST(CycleClass, Examples) {
  auto tri = triangle_in_disc();
  Cycle face{0, {{0, true}, {1, true}, {2, true}}};
  check_cycle(tri, face);
  EXPECT_EQ(cycle_class(tri, face), (HomologyClass{0, 0}));

  auto loop = straight_loop(2, 3);
  EXPECT_EQ(cycle_class(loop, Cycle{0, {{0, true}}}), (HomologyClass{2, 3}));
  EXPECT_EQ(cycle_class(loop, Cycle{0, {{0, false}}}), (HomologyClass{-2, -3}));

  // Edge lifts (1,0), (0,1), (-1,-1) telescope to zero.
  TorusGraph g;
  g.add_vertex("a", at("0", "0"));
  g.add_vertex("b", at("1/2", "0"));
  g.add_vertex("c", at("1/2", "1/2"));
  g.add_edge("ab", "a", "b", {pt("0", "0"), pt("3/2", "0")});
  g.add_edge("bc", "b", "c", {pt("1/2", "0"), pt("1/2", "3/2")});
  g.add_edge("ca", "c", "a", {pt("1/2", "1/2"), pt("-1", "-1")});
  EXPECT_EQ(cycle_class(g, Cycle{0, {{0, true}, {1, true}, {2, true}}}), (HomologyClass{0, 0}));
}

TEST(CheckCycle, RejectsBrokenWalks) {
  auto tri = triangle_in_disc();
  EXPECT_THROW(check_cycle(tri, Cycle{0, {{0, true}, {2, true}}}), StructuralError);
  EXPECT_THROW(check_cycle(tri, Cycle{0, {}}), StructuralError);
}

TEST(SimpleCycles, SpecCounts) {
  EXPECT_EQ(count_cycles(triangle_in_disc()), 1u);
  EXPECT_EQ(count_cycles(theta_in_disc()), 3u);
  EXPECT_EQ(count_cycles(k4_in_disc()), 7u);
  EXPECT_EQ(brute_force_cycle_count(AbstractGraph::complete(4)), 7u);
}

TEST(SimpleCycles, LoopsAndParallelEdges) {
  EXPECT_EQ(count_cycles(combinatorial({1, {{0, 0}, {0, 0}}})), 2u);
  EXPECT_EQ(count_cycles(combinatorial({2, {{0, 1}, {0, 1}, {1, 1}}})), 2u);
}

TEST(SimpleCycles, MatchesBruteForceOnRandomMultigraphs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_multigraph(rng, 6, 10);
    EXPECT_EQ(count_cycles(combinatorial(a)), brute_force_cycle_count(a)) << "trial " << trial;
  }
}

TEST(SimpleCycles, CompleteGraphsMatchClosedForm) {
  // Number of cycles in K_n: sum over k>=3 of C(n,k)(k-1)!/2.
  const std::size_t expected[] = {0, 0, 0, 1, 7, 37, 197, 1172};
  for (std::size_t n = 3; n <= 7; ++n) {
    EXPECT_EQ(count_cycles(combinatorial(AbstractGraph::complete(n))), expected[n]) << n;
  }
}

TEST(SimpleCycles, CapStopsTheScan) {
  auto g = combinatorial(AbstractGraph::complete(6));
  std::size_t seen = 0;
  auto status = enumerate_simple_cycles(g, 10, [&](const Cycle&) {
    ++seen;
    return true;
  });
  EXPECT_EQ(status, ScanStatus::CapExceeded);
  EXPECT_EQ(seen, 10u);
  status = enumerate_simple_cycles(g, 100, [&](const Cycle&) { return false; });
  EXPECT_EQ(status, ScanStatus::Stopped);
}

TEST(SimpleCycles, EachCycleOnce) {
  auto g = combinatorial(AbstractGraph::complete(5));
  std::set<std::set<EdgeIndex>> seen;
  enumerate_simple_cycles(g, kDefaultCycleCap, [&](const Cycle& c) {
    std::set<EdgeIndex> s;
    for (auto st : c.steps) s.insert(st.edge);
    EXPECT_TRUE(seen.insert(s).second);
    return true;
  });
  EXPECT_EQ(seen.size(), 37u);
}
