#include "torusgraph/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/is_kuratowski_subgraph.hpp>

namespace torusgraph {

AbstractGraph AbstractGraph::from(const TorusGraph& g) {
  AbstractGraph a{g.vertex_count(), {}};
  for (const auto& e : g.edges()) a.edges.emplace_back(e.u, e.v);
  return a;
}

AbstractGraph AbstractGraph::complete(std::size_t n) {
  AbstractGraph a{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.edges.emplace_back(i, j);
  return a;
}

AbstractGraph AbstractGraph::complete_bipartite(std::size_t m, std::size_t n) {
  AbstractGraph a{m + n, {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a.edges.emplace_back(i, m + j);
  return a;
}

AbstractGraph AbstractGraph::theta(std::size_t n) {
  AbstractGraph a{2, {}};
  for (std::size_t i = 0; i < n; ++i) a.edges.emplace_back(0, 1);
  return a;
}

AbstractGraph simplify_graph(const AbstractGraph& g) {
  std::set<EndpointPair> kept;
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    kept.insert({std::min(u, v), std::max(u, v)});
  }
  return {g.vertex_count, {kept.begin(), kept.end()}};
}

const char* to_string(NonplanarityKind k) {
  switch (k) {
    case NonplanarityKind::None: return "none";
    case NonplanarityKind::EdgeBound: return "edge-bound";
    case NonplanarityKind::K5Subdivision: return "K5-subdivision";
    case NonplanarityKind::K33Subdivision: return "K33-subdivision";
  }
  return "?";
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const AbstractGraph& simple) {
  BoostGraph bg(simple.vertex_count);
  int idx = 0;
  for (auto [u, v] : simple.edges) {
    auto [e, ok] = boost::add_edge(u, v, bg);
    (void)ok;
    boost::put(boost::edge_index, bg, e, idx++);
  }
  return bg;
}

NonplanarityKind subdivision_kind(const std::vector<EndpointPair>& edges) {
  std::map<std::size_t, int> degree;
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  int deg3 = 0, deg4 = 0;
  for (auto [v, d] : degree) {
    if (d == 3) ++deg3;
    if (d == 4) ++deg4;
  }
  if (deg4 == 5) return NonplanarityKind::K5Subdivision;
  if (deg3 == 6) return NonplanarityKind::K33Subdivision;
  return NonplanarityKind::None;
}

}  // namespace

PlanarityResult is_planar_unpruned(const AbstractGraph& g) {
  auto simple = simplify_graph(g);
  auto bg = to_boost(simple);
  std::vector<BoostEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  PlanarityResult r;
  r.planar = planar;
  if (planar) return r;
  for (const auto& e : kuratowski) {
    std::size_t u = boost::source(e, bg), v = boost::target(e, bg);
    r.certificate.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(r.certificate.begin(), r.certificate.end());
  r.certificate.erase(std::unique(r.certificate.begin(), r.certificate.end()), r.certificate.end());
  // The extracted edge set can carry extra edges; drop every edge whose
  // removal leaves it nonplanar. A minimal nonplanar set is a subdivision.
  for (std::size_t i = r.certificate.size(); i-- > 0;) {
    AbstractGraph rest{simple.vertex_count, r.certificate};
    rest.edges.erase(rest.edges.begin() + static_cast<std::ptrdiff_t>(i));
    auto rest_bg = to_boost(rest);
    if (!boost::boyer_myrvold_planarity_test(rest_bg)) r.certificate = std::move(rest.edges);
  }
  r.kind = subdivision_kind(r.certificate);
  return r;
}

PlanarityResult is_planar(const AbstractGraph& g) {
  auto simple = simplify_graph(g);
  if (simple.vertex_count >= 3 && simple.edges.size() > 3 * simple.vertex_count - 6) {
    return {false, NonplanarityKind::EdgeBound, {}};
  }
  return is_planar_unpruned(simple);
}

bool verify_kuratowski(const AbstractGraph& g, const std::vector<EndpointPair>& edges) {
  auto simple = simplify_graph(g);
  std::set<EndpointPair> present(simple.edges.begin(), simple.edges.end());
  for (auto [u, v] : edges) {
    if (!present.count({std::min(u, v), std::max(u, v)})) return false;
  }
  auto bg = to_boost(simple);
  std::vector<BoostEdge> chosen;
  for (auto [u, v] : edges) chosen.push_back(boost::edge(u, v, bg).first);
  return boost::is_kuratowski_subgraph(bg, chosen.begin(), chosen.end());
}

}  // namespace torusgraph
