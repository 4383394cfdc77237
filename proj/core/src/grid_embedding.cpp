#include "torusgraph/grid_embedding.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace torusgraph {

std::size_t GridEmbedding::segment_id(GridPoint from, Dir d) const {
  switch (d) {
    case Dir::Right: return 2 * point_id(from);
    case Dir::Up: return 2 * point_id(from) + 1;
    case Dir::Left: return 2 * point_id(step(from, Dir::Left));
    case Dir::Down: return 2 * point_id(step(from, Dir::Down)) + 1;
  }
  return 0;
}

LatticeVector GridEmbedding::lift(std::size_t edge) const {
  auto [u, v] = graph.edges.at(edge);
  std::int64_t x = positions[u].x, y = positions[u].y;
  for (auto d : paths[edge]) {
    x += dx(d);
    y += dy(d);
  }
  x -= positions[v].x;
  y -= positions[v].y;
  if (x % n != 0 || y % n != 0) throw StructuralError("grid path does not end at its vertex");
  return {x / n, y / n};
}

std::size_t GridEmbedding::total_segments() const {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.size();
  return total;
}

std::optional<std::string> GridEmbedding::violation() const {
  if (n < 2) return "grid size must be at least 2";
  if (positions.size() != graph.vertex_count) return "position count differs from vertex count";
  if (paths.size() != graph.edges.size()) return "path count differs from edge count";
  const std::size_t points = static_cast<std::size_t>(n * n);
  // 0 free, 1 vertex, 2 path interior
  std::vector<char> occupied(points, 0);
  std::vector<char> used(2 * points, 0);
  for (std::size_t v = 0; v < positions.size(); ++v) {
    auto p = positions[v];
    if (p.x < 0 || p.y < 0 || p.x >= n || p.y >= n) return "vertex " + std::to_string(v) + " off the grid";
    if (occupied[point_id(p)]) return "two vertices share a point";
    occupied[point_id(p)] = 1;
  }
  for (std::size_t e = 0; e < paths.size(); ++e) {
    auto [u, v] = graph.edges[e];
    const auto& path = paths[e];
    if (path.empty()) return "edge " + std::to_string(e) + " has an empty path";
    GridPoint at = positions[u];
    for (std::size_t i = 0; i < path.size(); ++i) {
      auto s = segment_id(at, path[i]);
      if (used[s]) return "segment reused by edge " + std::to_string(e);
      used[s] = 1;
      at = step(at, path[i]);
      if (i + 1 == path.size()) break;
      if (occupied[point_id(at)]) return "edge " + std::to_string(e) + " runs through an occupied point";
      occupied[point_id(at)] = 2;
    }
    if (at != positions[v]) return "edge " + std::to_string(e) + " does not end at its vertex";
  }
  return std::nullopt;
}

TorusGraph GridEmbedding::to_torus_graph(TorusKind kind) const {
  TorusGraph g(kind);
  const Integer den(n);
  for (std::size_t v = 0; v < positions.size(); ++v) {
    g.add_vertex("v" + std::to_string(v),
                 {Rational(Integer(positions[v].x), den), Rational(Integer(positions[v].y), den)});
  }
  for (std::size_t e = 0; e < paths.size(); ++e) {
    auto [u, v] = graph.edges[e];
    std::int64_t x = positions[u].x, y = positions[u].y;
    std::vector<Vec2> poly{{Rational(Integer(x), den), Rational(Integer(y), den)}};
    for (auto d : paths[e]) {
      x += dx(d);
      y += dy(d);
      poly.push_back({Rational(Integer(x), den), Rational(Integer(y), den)});
    }
    g.add_edge("e" + std::to_string(e), u, v, std::move(poly));
  }
  return g;
}

std::string GridEmbedding::key() const {
  std::string k;
  k.reserve(positions.size() * 2 + total_segments() + paths.size());
  for (auto p : positions) {
    k.push_back(static_cast<char>(p.x));
    k.push_back(static_cast<char>(p.y));
  }
  for (const auto& path : paths) {
    for (auto d : path) k.push_back(static_cast<char>('0' + static_cast<int>(d)));
    k.push_back('|');
  }
  return k;
}

namespace {

std::vector<Dir> reversed_path(const std::vector<Dir>& path) {
  std::vector<Dir> r;
  r.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) r.push_back(opposite(*it));
  return r;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

class Enumerator {
 public:
  Enumerator(const AbstractGraph& g, int n, const EnumerationOptions& options,
             const std::function<bool(const GridEmbedding&)>& visit)
      : options_(options), visit_(visit) {
    if (n < 2) throw std::invalid_argument("grid size must be at least 2");
    state_.n = n;
    state_.graph = g;
    state_.positions.assign(g.vertex_count, {});
    state_.paths.assign(g.edges.size(), {});
    occupied_.assign(static_cast<std::size_t>(n * n), 0);
    used_.assign(2 * static_cast<std::size_t>(n * n), 0);
    plan();
  }

  EnumerationStatus run() {
    auto r = next(0);
    if (r == Flow::Stop) return EnumerationStatus::Stopped;
    if (r == Flow::Truncate) return EnumerationStatus::Truncated;
    return EnumerationStatus::Complete;
  }

 private:
  enum class Flow { Continue, Stop, Truncate };

  struct Action {
    bool place = false;         // place `vertex` anywhere free
    std::size_t vertex = 0;
    std::size_t edge = 0;
    std::size_t from = 0;       // placed endpoint the path starts at
    std::size_t to = 0;
    bool to_placed = false;
  };

  void plan() {
    const auto& g = state_.graph;
    std::vector<std::vector<std::size_t>> inc(g.vertex_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      inc[g.edges[e].first].push_back(e);
      if (g.edges[e].second != g.edges[e].first) inc[g.edges[e].second].push_back(e);
    }
    std::vector<bool> found(g.vertex_count, false), planned(g.edges.size(), false);
    for (std::size_t root = 0; root < g.vertex_count; ++root) {
      if (found[root]) continue;
      found[root] = true;
      actions_.push_back({true, root, 0, 0, 0, false});
      std::deque<std::size_t> queue{root};
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto e : inc[x]) {
          if (planned[e]) continue;
          planned[e] = true;
          auto [u, v] = g.edges[e];
          auto y = (u == x) ? v : u;
          actions_.push_back({false, 0, e, x, y, found[y]});
          if (!found[y]) {
            found[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    const std::size_t loop_min = static_cast<std::size_t>(std::min(state_.n, 4));
    floor_.assign(actions_.size() + 1, 0);
    for (std::size_t i = actions_.size(); i-- > 0;) {
      std::size_t need = 0;
      if (!actions_[i].place) need = actions_[i].from == actions_[i].to ? loop_min : 1;
      floor_[i] = floor_[i + 1] + need;
    }
  }

  Flow next(std::size_t i) {
    if (i == actions_.size()) {
      if (emitted_ == options_.limit) return Flow::Truncate;
      ++emitted_;
      return visit_(state_) ? Flow::Continue : Flow::Stop;
    }
    const auto& a = actions_[i];
    if (a.place) {
      if (a.vertex == 0) return place_at(i, {0, 0});
      for (int y = 0; y < state_.n; ++y) {
        for (int x = 0; x < state_.n; ++x) {
          GridPoint p{x, y};
          if (occupied_[state_.point_id(p)]) continue;
          if (auto r = place_at(i, p); r != Flow::Continue) return r;
        }
      }
      return Flow::Continue;
    }
    path_.clear();
    return extend(i, state_.positions[a.from]);
  }

  Flow place_at(std::size_t i, GridPoint p) {
    state_.positions[actions_[i].vertex] = p;
    occupied_[state_.point_id(p)] = 1;
    auto r = next(i + 1);
    occupied_[state_.point_id(p)] = 0;
    return r;
  }

  // Depth-first over simple lattice paths leaving the `from` endpoint.
  Flow extend(std::size_t i, GridPoint at) {
    const auto& a = actions_[i];
    const bool loop = a.from == a.to;
    for (int k = 0; k < 4; ++k) {
      Dir d = static_cast<Dir>(k);
      auto s = state_.segment_id(at, d);
      if (used_[s]) continue;
      if (saturating_add(saturating_add(used_total_, path_.size() + 1), floor_[i + 1]) >
          options_.max_total_segments) {
        return Flow::Continue;
      }
      GridPoint q = state_.step(at, d);
      path_.push_back(d);
      used_[s] = 1;
      Flow r = Flow::Continue;
      const bool hits_target = a.to_placed && q == state_.positions[a.to];
      if (hits_target) {
        if (!loop || path_ <= reversed_path(path_)) r = finish(i, q);
      } else if (!occupied_[state_.point_id(q)]) {
        if (!a.to_placed) r = finish(i, q);
        if (r == Flow::Continue) {
          occupied_[state_.point_id(q)] = 2;
          r = extend(i, q);
          occupied_[state_.point_id(q)] = 0;
        }
      }
      used_[s] = 0;
      path_.pop_back();
      if (r != Flow::Continue) return r;
    }
    return Flow::Continue;
  }

  Flow finish(std::size_t i, GridPoint end) {
    const auto& a = actions_[i];
    auto [u, v] = state_.graph.edges[a.edge];
    (void)v;
    state_.paths[a.edge] = (a.from == u) ? path_ : reversed_path(path_);
    if (!a.to_placed) {
      state_.positions[a.to] = end;
      occupied_[state_.point_id(end)] = 1;
    }
    used_total_ += path_.size();
    auto saved = std::move(path_);
    path_.clear();
    Flow r = next(i + 1);
    path_ = std::move(saved);
    used_total_ -= path_.size();
    if (!a.to_placed) occupied_[state_.point_id(end)] = 0;
    return r;
  }

  EnumerationOptions options_;
  const std::function<bool(const GridEmbedding&)>& visit_;
  GridEmbedding state_;
  std::vector<Action> actions_;
  std::vector<std::size_t> floor_;
  std::vector<char> occupied_;
  std::vector<char> used_;
  std::vector<Dir> path_;
  std::size_t used_total_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace

EnumerationStatus enumerate_grid_embeddings(const AbstractGraph& g, int n, const EnumerationOptions& options,
                                            const std::function<bool(const GridEmbedding&)>& visit) {
  return Enumerator(g, n, options, visit).run();
}

std::vector<GridEmbedding> collect_grid_embeddings(const AbstractGraph& g, int n,
                                                   const EnumerationOptions& options,
                                                   EnumerationStatus* status) {
  std::vector<GridEmbedding> out;
  auto s = enumerate_grid_embeddings(g, n, options, [&](const GridEmbedding& e) {
    out.push_back(e);
    return true;
  });
  if (status) *status = s;
  return out;
}

}  // namespace torusgraph
