#include <gtest/gtest.h>

#include "planarity_oracle.hpp"
#include "torusgraph/planarity.hpp"

using namespace torusgraph;
using testing_support::MinorSearch;

TEST(SimplifyGraph, Examples) {
  EXPECT_EQ(simplify_graph(AbstractGraph::theta(3)), (AbstractGraph{2, {{0, 1}}}));
  EXPECT_EQ(simplify_graph(AbstractGraph::complete(5)).edges.size(), 10u);
  AbstractGraph bouquet{1, {{0, 0}, {0, 0}, {0, 0}}};
  EXPECT_EQ(simplify_graph(bouquet), (AbstractGraph{1, {}}));
  EXPECT_EQ(simplify_graph(AbstractGraph{3, {{2, 0}, {0, 2}, {1, 0}}}), (AbstractGraph{3, {{0, 1}, {0, 2}}}));
}

TEST(IsPlanar, K5AndK33) {
  auto k5 = is_planar(AbstractGraph::complete(5));
  EXPECT_FALSE(k5.planar);
  EXPECT_EQ(k5.kind, NonplanarityKind::EdgeBound);
  auto k5u = is_planar_unpruned(AbstractGraph::complete(5));
  EXPECT_FALSE(k5u.planar);
  EXPECT_EQ(k5u.kind, NonplanarityKind::K5Subdivision);
  EXPECT_TRUE(verify_kuratowski(AbstractGraph::complete(5), k5u.certificate));

  auto k33 = is_planar(AbstractGraph::complete_bipartite(3, 3));
  EXPECT_FALSE(k33.planar);
  EXPECT_EQ(k33.kind, NonplanarityKind::K33Subdivision);
  EXPECT_TRUE(verify_kuratowski(AbstractGraph::complete_bipartite(3, 3), k33.certificate));
}

TEST(IsPlanar, ThetaGraphs) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_planar(AbstractGraph::theta(n)).planar) << n;
}

TEST(IsPlanar, SmallAndEmpty) {
  EXPECT_TRUE(is_planar(AbstractGraph{0, {}}).planar);
  EXPECT_TRUE(is_planar(AbstractGraph{1, {{0, 0}}}).planar);
  EXPECT_TRUE(is_planar(AbstractGraph::complete(4)).planar);
}

TEST(IsPlanar, PetersenHasK33Certificate) {
  AbstractGraph p{10, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    p.edges.emplace_back(i, (i + 1) % 5);
    p.edges.emplace_back(i, i + 5);
    p.edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  auto r = is_planar(p);
  EXPECT_FALSE(r.planar);
  EXPECT_EQ(r.kind, NonplanarityKind::K33Subdivision);
  EXPECT_TRUE(verify_kuratowski(p, r.certificate));
}

TEST(VerifyKuratowski, RejectsNonSubdivisions) {
  auto k5 = AbstractGraph::complete(5);
  auto cert = is_planar_unpruned(k5).certificate;
  cert.pop_back();
  EXPECT_FALSE(verify_kuratowski(k5, cert));
  EXPECT_FALSE(verify_kuratowski(AbstractGraph::complete(4), simplify_graph(AbstractGraph::complete(4)).edges));
}

TEST(MinorOracle, KnownGraphs) {
  EXPECT_TRUE(MinorSearch(AbstractGraph::complete(5)).has_k5_minor());
  EXPECT_FALSE(MinorSearch(AbstractGraph::complete(5)).has_k33_minor());
  EXPECT_TRUE(MinorSearch(AbstractGraph::complete_bipartite(3, 3)).has_k33_minor());
  EXPECT_FALSE(MinorSearch(AbstractGraph::complete_bipartite(3, 3)).has_k5_minor());
  EXPECT_TRUE(MinorSearch(AbstractGraph::complete(4)).planar());
  EXPECT_FALSE(MinorSearch(AbstractGraph::complete(6)).planar());
}
