#include "torusgraph/torus_graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace torusgraph {

VertexIndex TorusGraph::add_vertex(std::string id, TorusPoint p) {
  if (!TorusPoint::in_domain(p.x) || !TorusPoint::in_domain(p.y)) {
    throw StructuralError("vertex " + id + ": coordinates must lie in [0,1)");
  }
  if (vertex_ids_.count(id)) throw StructuralError("duplicate vertex id " + id);
  VertexIndex idx = vertices_.size();
  vertex_ids_.emplace(id, idx);
  vertices_.push_back({std::move(id), p});
  return idx;
}

EdgeIndex TorusGraph::add_edge(std::string id, const std::string& u, const std::string& v,
                               std::vector<Vec2> polyline) {
  auto ui = find_vertex(u);
  auto vi = find_vertex(v);
  if (!ui) throw StructuralError("edge " + id + ": unknown vertex " + u);
  if (!vi) throw StructuralError("edge " + id + ": unknown vertex " + v);
  return add_edge(std::move(id), *ui, *vi, std::move(polyline));
}

EdgeIndex TorusGraph::add_edge(std::string id, VertexIndex u, VertexIndex v,
                               std::vector<Vec2> polyline) {
  if (u >= vertices_.size() || v >= vertices_.size()) {
    throw StructuralError("edge " + id + ": endpoint index out of range");
  }
  if (edge_ids_.count(id)) throw StructuralError("duplicate edge id " + id);
  EdgeIndex idx = edges_.size();
  edge_ids_.emplace(id, idx);
  edges_.push_back({std::move(id), u, v, std::move(polyline)});
  return idx;
}

std::optional<VertexIndex> TorusGraph::find_vertex(const std::string& id) const {
  auto it = vertex_ids_.find(id);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> TorusGraph::find_edge(const std::string& id) const {
  auto it = edge_ids_.find(id);
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<EdgeIndex>> TorusGraph::incidence() const {
  std::vector<std::vector<EdgeIndex>> inc(vertices_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].u].push_back(e);
    inc[edges_[e].v].push_back(e);
  }
  return inc;
}

bool operator==(const Vertex& a, const Vertex& b) {
  return a.id == b.id && a.position == b.position;
}

bool operator==(const EdgeGeometry& a, const EdgeGeometry& b) {
  return a.id == b.id && a.u == b.u && a.v == b.v && a.polyline == b.polyline;
}

bool operator==(const TorusGraph& a, const TorusGraph& b) {
  return a.kind_ == b.kind_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

namespace {

struct Box {
  Rational min_x, max_x, min_y, max_y;
};

Box box_of(const Vec2& a, const Vec2& b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return sign(cross(b - a, c - a)); }

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orient(a, b, p) != 0) return false;
  auto bx = box_of(a, b);
  return p.x >= bx.min_x && p.x <= bx.max_x && p.y >= bx.min_y && p.y <= bx.max_y;
}

enum class Contact { None, Point, Overlap };

struct SegmentHit {
  Contact kind = Contact::None;
  Vec2 point;
};

SegmentHit intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  int d1 = orient(q1, q2, p1);
  int d2 = orient(q1, q2, p2);
  int d3 = orient(p1, p2, q1);
  int d4 = orient(p1, p2, q2);
  if (d1 == 0 && d2 == 0) {
    // Collinear: project onto p's direction and intersect the parameter ranges.
    Vec2 dir = p2 - p1;
    auto param = [&](const Vec2& x) {
      Vec2 r = x - p1;
      return (r.x * dir.x + r.y * dir.y) / (dir.x * dir.x + dir.y * dir.y);
    };
    Rational s0 = param(q1), s1 = param(q2);
    if (s0 > s1) std::swap(s0, s1);
    Rational lo = std::max(s0, Rational(0));
    Rational hi = std::min(s1, Rational(1));
    if (lo > hi) return {};
    Vec2 at{p1.x + dir.x * lo, p1.y + dir.y * lo};
    return {lo == hi ? Contact::Point : Contact::Overlap, at};
  }
  if (d1 * d2 > 0 || d3 * d4 > 0) return {};
  Vec2 r = p2 - p1;
  Vec2 s = q2 - q1;
  Rational t = cross(q1 - p1, s) / cross(r, s);
  return {Contact::Point, {p1.x + r.x * t, p1.y + r.y * t}};
}

Vec2 shift(const Vec2& p, LatticeVector w) { return p + to_vec2(w); }

std::pair<std::int64_t, std::int64_t> translate_range(const Rational& a_min, const Rational& a_max,
                                                      const Rational& b_min, const Rational& b_max) {
  return {static_cast<std::int64_t>(ceil_of(a_min - b_max)),
          static_cast<std::int64_t>(floor_of(a_max - b_min))};
}

bool is_end(const std::vector<Vec2>& poly, const Vec2& x, LatticeVector w) {
  return x == shift(poly.front(), w) || x == shift(poly.back(), w);
}

}  // namespace

void check_structure(const TorusGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.polyline.size() < 2) {
      throw StructuralError("edge " + e.id + ": polyline needs at least two points");
    }
    for (std::size_t i = 0; i + 1 < e.polyline.size(); ++i) {
      if (e.polyline[i] == e.polyline[i + 1]) {
        throw StructuralError("edge " + e.id + ": repeated consecutive polyline point");
      }
    }
    if (e.polyline.front() != g.vertex(e.u).position.lift()) {
      throw StructuralError("edge " + e.id + ": first point is not at vertex " + g.vertex(e.u).id);
    }
    Vec2 off = e.polyline.back() - g.vertex(e.v).position.lift();
    if (!is_integer(off.x) || !is_integer(off.y)) {
      throw StructuralError("edge " + e.id + ": last point is not a lift of vertex " +
                            g.vertex(e.v).id);
    }
  }
}

LatticeVector edge_class(const TorusGraph& g, EdgeIndex e) {
  const auto& edge = g.edge(e);
  if (edge.polyline.size() < 2) {
    throw StructuralError("edge " + edge.id + ": polyline needs at least two points");
  }
  if (edge.polyline.front() != g.vertex(edge.u).position.lift()) {
    throw StructuralError("edge " + edge.id + ": first point is not at its start vertex");
  }
  Vec2 off = edge.polyline.back() - g.vertex(edge.v).position.lift();
  if (!is_integer(off.x) || !is_integer(off.y)) {
    throw StructuralError("edge " + edge.id + ": last point is not a lift of its end vertex");
  }
  return {static_cast<std::int64_t>(off.x.numerator()), static_cast<std::int64_t>(off.y.numerator())};
}

ValidationReport validate_embedding(const TorusGraph& g) {
  check_structure(g);

  struct Keyed {
    std::tuple<std::size_t, std::size_t, bool, LatticeVector> key;
    Violation v;
  };
  std::vector<Keyed> found;
  const auto& edges = g.edges();

  for (EdgeIndex a = 0; a < edges.size(); ++a) {
    const auto& pa = edges[a].polyline;
    for (EdgeIndex b = a; b < edges.size(); ++b) {
      const auto& pb = edges[b].polyline;
      bool reported = false;
      for (std::size_t i = 0; i + 1 < pa.size() && !reported; ++i) {
        Box ba = box_of(pa[i], pa[i + 1]);
        for (std::size_t j = 0; j + 1 < pb.size() && !reported; ++j) {
          Box bb = box_of(pb[j], pb[j + 1]);
          auto [wx0, wx1] = translate_range(ba.min_x, ba.max_x, bb.min_x, bb.max_x);
          auto [wy0, wy1] = translate_range(ba.min_y, ba.max_y, bb.min_y, bb.max_y);
          for (auto wx = wx0; wx <= wx1 && !reported; ++wx) {
            for (auto wy = wy0; wy <= wy1 && !reported; ++wy) {
              LatticeVector w{wx, wy};
              if (a == b) {
                // Each unordered pair of translates once; identical segment skipped.
                if (w < LatticeVector{0, 0}) continue;
                if (w == LatticeVector{0, 0} && j <= i) continue;
              }
              SegmentHit hit = intersect(pa[i], pa[i + 1], shift(pb[j], w), shift(pb[j + 1], w));
              if (hit.kind == Contact::None) continue;
              if (hit.kind == Contact::Point) {
                if (a == b && w == LatticeVector{0, 0} && j == i + 1 && hit.point == pa[i + 1]) {
                  continue;
                }
                if (is_end(pa, hit.point, {0, 0}) && is_end(pb, hit.point, w)) continue;
              }
              found.push_back({{a, b, false, w}, {edges[a].id, edges[b].id, hit.point, w, false}});
              reported = true;
            }
          }
        }
      }
    }
  }

  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    const auto& poly = edges[e].polyline;
    for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
      Vec2 p = g.vertex(x).position.lift();
      bool reported = false;
      for (std::size_t i = 0; i + 1 < poly.size() && !reported; ++i) {
        Box bs = box_of(poly[i], poly[i + 1]);
        auto [wx0, wx1] = translate_range(bs.min_x, bs.max_x, p.x, p.x);
        auto [wy0, wy1] = translate_range(bs.min_y, bs.max_y, p.y, p.y);
        for (auto wx = wx0; wx <= wx1 && !reported; ++wx) {
          for (auto wy = wy0; wy <= wy1 && !reported; ++wy) {
            Vec2 q = shift(p, {wx, wy});
            if (!on_segment(q, poly[i], poly[i + 1])) continue;
            if (x == edges[e].u && q == poly.front()) continue;
            if (x == edges[e].v && q == poly.back()) continue;
            found.push_back({{e, x, true, {wx, wy}}, {edges[e].id, g.vertex(x).id, q, {wx, wy}, true}});
            reported = true;
          }
        }
      }
    }
  }

  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    for (VertexIndex y = x + 1; y < g.vertex_count(); ++y) {
      if (g.vertex(x).position == g.vertex(y).position) {
        // Sorted after all edge keys.
        found.push_back({{edges.size() + x, y, true, {0, 0}},
                         {g.vertex(x).id, g.vertex(y).id, g.vertex(x).position.lift(), {0, 0}, true}});
      }
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Keyed& l, const Keyed& r) { return l.key < r.key; });
  ValidationReport report;
  for (auto& k : found) report.violations.push_back(std::move(k.v));
  report.ok = report.violations.empty();
  return report;
}

std::vector<std::size_t> component_labels(const TorusGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(g.vertex_count());
  std::map<std::size_t, std::size_t> numbering;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto root = find(v);
    auto it = numbering.try_emplace(root, numbering.size()).first;
    label[v] = it->second;
  }
  return label;
}

std::vector<TorusGraph> components(const TorusGraph& g) {
  auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<TorusGraph> parts(count, TorusGraph(g.torus()));
  std::vector<VertexIndex> local(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    local[v] = parts[label[v]].add_vertex(g.vertex(v).id, g.vertex(v).position);
  }
  for (const auto& e : g.edges()) {
    parts[label[e.u]].add_edge(e.id, local[e.u], local[e.v], e.polyline);
  }
  return parts;
}

}  // namespace torusgraph
