#include "torusgraph/homology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace torusgraph {

namespace {

VertexIndex step_source(const TorusGraph& g, const CycleStep& s) {
  const auto& e = g.edge(s.edge);
  return s.forward ? e.u : e.v;
}

VertexIndex step_target(const TorusGraph& g, const CycleStep& s) {
  const auto& e = g.edge(s.edge);
  return s.forward ? e.v : e.u;
}

struct Neighbor {
  EdgeIndex edge;
  VertexIndex other;
  bool forward;
};

// Non-loop incidences per vertex, sorted by edge index.
std::vector<std::vector<Neighbor>> neighbors(const TorusGraph& g) {
  std::vector<std::vector<Neighbor>> adj(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (edge.is_loop()) continue;
    adj[edge.u].push_back({e, edge.v, true});
    adj[edge.v].push_back({e, edge.u, false});
  }
  return adj;
}

}  // namespace

std::vector<VertexIndex> Cycle::vertices(const TorusGraph& g) const {
  std::vector<VertexIndex> vs;
  vs.reserve(steps.size());
  VertexIndex at = base;
  for (const auto& s : steps) {
    vs.push_back(at);
    at = step_target(g, s);
  }
  return vs;
}

Cycle Cycle::reversed(const TorusGraph&) const {
  Cycle r{base, {}};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) r.steps.push_back({it->edge, !it->forward});
  return r;
}

bool SpanningTree::contains(EdgeIndex e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

SpanningTree spanning_tree(const TorusGraph& g) {
  auto adj = neighbors(g);
  SpanningTree t;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexIndex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    t.roots.push_back(root);
    seen[root] = true;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      VertexIndex x = queue.front();
      queue.pop_front();
      for (const auto& n : adj[x]) {
        if (seen[n.other]) continue;
        seen[n.other] = true;
        t.edges.push_back(n.edge);
        queue.push_back(n.other);
      }
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

void check_spanning_tree(const TorusGraph& g, const SpanningTree& t) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto e : t.edges) {
    if (e >= g.edge_count()) throw StructuralError("spanning tree references unknown edge");
    auto a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) throw StructuralError("spanning tree contains a cycle at edge " + g.edge(e).id);
    parent[a] = b;
  }
  auto labels = component_labels(g);
  std::size_t comps = 0;
  for (auto l : labels) comps = std::max(comps, l + 1);
  if (t.edges.size() + comps != g.vertex_count()) {
    throw StructuralError("edge set does not span every component");
  }
}

namespace {

struct RootedTree {
  std::vector<VertexIndex> parent;
  std::vector<CycleStep> up;  // step from a vertex to its parent
  std::vector<std::size_t> depth;
};

RootedTree root_tree(const TorusGraph& g, const SpanningTree& t) {
  std::vector<std::vector<Neighbor>> adj(g.vertex_count());
  for (auto e : t.edges) {
    const auto& edge = g.edge(e);
    adj[edge.u].push_back({e, edge.v, true});
    adj[edge.v].push_back({e, edge.u, false});
  }
  RootedTree r;
  const auto none = g.vertex_count();
  r.parent.assign(g.vertex_count(), none);
  r.up.assign(g.vertex_count(), {});
  r.depth.assign(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  auto labels = component_labels(g);
  std::vector<VertexIndex> roots = t.roots;
  if (roots.empty()) {
    std::vector<bool> have(g.vertex_count(), false);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (!have[labels[v]]) {
        have[labels[v]] = true;
        roots.push_back(v);
      }
    }
  }
  for (auto root : roots) {
    seen[root] = true;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& n : adj[x]) {
        if (seen[n.other]) continue;
        seen[n.other] = true;
        r.parent[n.other] = x;
        r.up[n.other] = {n.edge, !n.forward};
        r.depth[n.other] = r.depth[x] + 1;
        queue.push_back(n.other);
      }
    }
  }
  return r;
}

// Tree walk from a to b.
std::vector<CycleStep> tree_path(const RootedTree& r, VertexIndex a, VertexIndex b) {
  std::vector<CycleStep> from_a, from_b;
  while (a != b) {
    if (r.depth[a] >= r.depth[b]) {
      from_a.push_back(r.up[a]);
      a = r.parent[a];
    } else {
      from_b.push_back({r.up[b].edge, !r.up[b].forward});
      b = r.parent[b];
    }
  }
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

}  // namespace

std::vector<Cycle> fundamental_cycles(const TorusGraph& g, const SpanningTree& t) {
  check_spanning_tree(g, t);
  auto rooted = root_tree(g, t);
  std::vector<Cycle> cycles;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (t.contains(e)) continue;
    const auto& edge = g.edge(e);
    Cycle c{edge.u, {{e, true}}};
    auto back = tree_path(rooted, edge.v, edge.u);
    c.steps.insert(c.steps.end(), back.begin(), back.end());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

void check_cycle(const TorusGraph& g, const Cycle& c) {
  if (c.steps.empty()) throw StructuralError("cycle has no edges");
  if (c.base >= g.vertex_count()) throw StructuralError("cycle base is not a vertex");
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<bool> used(g.edge_count(), false);
  VertexIndex at = c.base;
  for (const auto& s : c.steps) {
    if (s.edge >= g.edge_count()) throw StructuralError("cycle references unknown edge");
    if (used[s.edge]) throw StructuralError("cycle repeats edge " + g.edge(s.edge).id);
    used[s.edge] = true;
    if (step_source(g, s) != at) {
      throw StructuralError("cycle is not a walk at edge " + g.edge(s.edge).id);
    }
    if (visited[at]) throw StructuralError("cycle repeats vertex " + g.vertex(at).id);
    visited[at] = true;
    at = step_target(g, s);
  }
  if (at != c.base) throw StructuralError("cycle does not close at its base");
}

HomologyClass cycle_class(const TorusGraph& g, const Cycle& c) {
  check_cycle(g, c);
  HomologyClass sum;
  for (const auto& s : c.steps) {
    auto t = HomologyClass::from(edge_class(g, s.edge));
    sum = s.forward ? sum + t : sum - t;
  }
  return sum;
}

ScanStatus enumerate_simple_cycles(const TorusGraph& g, std::size_t cap,
                                   const std::function<bool(const Cycle&)>& visit) {
  if (cap == 0) throw std::invalid_argument("cycle cap must be at least 1");
  auto adj = neighbors(g);
  std::size_t emitted = 0;
  enum class Outcome { Continue, Stop, Cap };

  auto emit = [&](const Cycle& c) -> Outcome {
    if (emitted == cap) return Outcome::Cap;
    ++emitted;
    return visit(c) ? Outcome::Continue : Outcome::Stop;
  };

  std::vector<bool> on_path(g.vertex_count(), false);
  Cycle current;

  std::function<Outcome(VertexIndex, VertexIndex)> dfs = [&](VertexIndex start, VertexIndex at) -> Outcome {
    for (const auto& n : adj[at]) {
      if (n.other == start) {
        if (current.steps.front().edge < n.edge) {
          current.steps.push_back({n.edge, n.forward});
          auto r = emit(current);
          current.steps.pop_back();
          if (r != Outcome::Continue) return r;
        }
        continue;
      }
      if (n.other < start || on_path[n.other]) continue;
      on_path[n.other] = true;
      current.steps.push_back({n.edge, n.forward});
      auto r = dfs(start, n.other);
      current.steps.pop_back();
      on_path[n.other] = false;
      if (r != Outcome::Continue) return r;
    }
    return Outcome::Continue;
  };

  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (edge.is_loop() && edge.u == s) {
        auto r = emit(Cycle{s, {{e, true}}});
        if (r == Outcome::Stop) return ScanStatus::Stopped;
        if (r == Outcome::Cap) return ScanStatus::CapExceeded;
      }
    }
    on_path[s] = true;
    current.base = s;
    for (const auto& n : adj[s]) {
      if (n.other < s) continue;
      on_path[n.other] = true;
      current.steps = {{n.edge, n.forward}};
      auto r = dfs(s, n.other);
      on_path[n.other] = false;
      if (r == Outcome::Stop) return ScanStatus::Stopped;
      if (r == Outcome::Cap) return ScanStatus::CapExceeded;
    }
    current.steps.clear();
    on_path[s] = false;
  }
  return ScanStatus::Complete;
}

PrimitiveReduction primitive_reduce(HomologyClass a) {
  std::int64_t g = std::gcd(a.p < 0 ? -a.p : a.p, a.q < 0 ? -a.q : a.q);
  if (g == 0) return {0, {0, 0}};
  HomologyClass u{a.p / g, a.q / g};
  if (u.p < 0 || (u.p == 0 && u.q < 0)) u = -u;
  return {g, u};
}

bool is_zero_or_primitive(HomologyClass a) {
  auto g = primitive_reduce(a).gcd;
  return g == 0 || g == 1;
}

}  // namespace torusgraph
