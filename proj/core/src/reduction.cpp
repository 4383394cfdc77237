#include "torusgraph/reduction.hpp"

#include <algorithm>
#include <unordered_map>

namespace torusgraph {

namespace {

std::optional<GridEmbedding> try_cell_slide(const GridEmbedding& e, const CellSlide& m) {
  if (m.edge >= e.paths.size()) return std::nullopt;
  const auto& path = e.paths[m.edge];
  if (m.count < 1 || m.count > 3 || m.start + m.count > path.size()) return std::nullopt;
  if (m.turn != 1 && m.turn != -1) return std::nullopt;
  // The cell boundary traversed from the slid run's first step.
  Dir side[4];
  side[0] = path[m.start];
  for (int k = 1; k < 4; ++k) side[k] = rotate(side[k - 1], m.turn);
  for (std::size_t k = 1; k < m.count; ++k) {
    if (path[m.start + k] != side[k]) return std::nullopt;
  }
  std::vector<Dir> replaced(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(m.start));
  for (int k = 3; k >= static_cast<int>(m.count); --k) replaced.push_back(opposite(side[k]));
  replaced.insert(replaced.end(), path.begin() + static_cast<std::ptrdiff_t>(m.start + m.count), path.end());
  GridEmbedding out = e;
  out.paths[m.edge] = std::move(replaced);
  if (!out.valid()) return std::nullopt;
  return out;
}

struct Incidence {
  std::size_t edge;
  bool at_start;
};

std::optional<GridEmbedding> try_vertex_slide(const GridEmbedding& e, const VertexSlide& m) {
  if (m.vertex >= e.positions.size()) return std::nullopt;
  const GridPoint from = e.positions[m.vertex];
  const auto seg = e.segment_id(from, m.dir);

  std::vector<Incidence> incidences;
  for (std::size_t k = 0; k < e.graph.edges.size(); ++k) {
    auto [u, v] = e.graph.edges[k];
    if (u == m.vertex) incidences.push_back({k, true});
    if (v == m.vertex) incidences.push_back({k, false});
  }
  auto uses_seg = [&](const Incidence& inc) {
    const auto& p = e.paths[inc.edge];
    if (p.empty()) return false;
    return inc.at_start ? e.segment_id(from, p.front()) == seg
                        : e.segment_id(from, opposite(p.back())) == seg;
  };

  GridEmbedding out = e;
  auto lengthen = [&](const Incidence& inc) {
    auto& p = out.paths[inc.edge];
    if (inc.at_start) p.insert(p.begin(), opposite(m.dir));
    else p.push_back(m.dir);
  };

  std::optional<std::size_t> along;
  for (std::size_t k = 0; k < incidences.size(); ++k) {
    if (uses_seg(incidences[k])) along = k;
  }
  if (along) {
    if (incidences.size() > 2) return std::nullopt;
    const auto& inc = incidences[*along];
    auto& p = out.paths[inc.edge];
    if (inc.at_start) p.erase(p.begin());
    else p.pop_back();
    if (p.empty()) return std::nullopt;
    for (std::size_t k = 0; k < incidences.size(); ++k) {
      if (k != *along) lengthen(incidences[k]);
    }
  } else {
    if (incidences.size() > 1) return std::nullopt;
    if (!incidences.empty()) lengthen(incidences.front());
  }
  out.positions[m.vertex] = e.step(from, m.dir);
  if (!out.valid()) return std::nullopt;
  return out;
}

std::optional<GridEmbedding> try_apply(const GridEmbedding& e, const Move& m) {
  if (const auto* c = std::get_if<CellSlide>(&m)) return try_cell_slide(e, *c);
  return try_vertex_slide(e, std::get<VertexSlide>(m));
}

template <typename F>
void for_each_candidate(const GridEmbedding& e, F&& f) {
  for (std::size_t edge = 0; edge < e.paths.size(); ++edge) {
    const auto len = e.paths[edge].size();
    for (std::size_t start = 0; start < len; ++start) {
      for (std::size_t count = 1; count <= 3 && start + count <= len; ++count) {
        for (int turn : {1, -1}) f(Move{CellSlide{edge, start, count, turn}});
      }
    }
  }
  for (std::size_t v = 0; v < e.positions.size(); ++v) {
    for (int d = 0; d < 4; ++d) f(Move{VertexSlide{v, static_cast<Dir>(d)}});
  }
}

}  // namespace

GridEmbedding apply_move(const GridEmbedding& e, const Move& m) {
  auto out = try_apply(e, m);
  if (!out) throw InapplicableMove("move is not applicable to this embedding");
  return std::move(*out);
}

std::vector<Move> applicable_moves(const GridEmbedding& e) {
  std::vector<Move> moves;
  for_each_candidate(e, [&](const Move& m) {
    if (try_apply(e, m)) moves.push_back(m);
  });
  return moves;
}

namespace {

// Whether the two sides of the cut along x = c + 1/2 (or y = c + 1/2 when
// transposed) lie in one face of the image inside the cut annulus.
bool dual_sides_share_face(const GridEmbedding& e, int c, bool transpose) {
  const int n = e.n;
  // occupied[h][y * n + x]: h = 1 for the segment (x,y)-(x+1,y) in cut coordinates.
  std::vector<char> occupied[2] = {std::vector<char>(n * n, 0), std::vector<char>(n * n, 0)};
  for (std::size_t k = 0; k < e.paths.size(); ++k) {
    GridPoint at = e.positions[e.graph.edges[k].first];
    for (auto d : e.paths[k]) {
      GridPoint next = e.step(at, d);
      GridPoint lo = (d == Dir::Right || d == Dir::Up) ? at : next;
      bool horizontal = d == Dir::Right || d == Dir::Left;
      if (transpose) {
        std::swap(lo.x, lo.y);
        horizontal = !horizontal;
      }
      occupied[horizontal ? 1 : 0][lo.y * n + lo.x] = 1;
      at = next;
    }
  }
  // Nodes: cell (x,y) is x*n+y for x != c; column c splits into left halves
  // n*n + y and right halves n*n + n + y.
  std::vector<int> parent(n * n + 2 * n);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  auto left_of = [&](int x, int y) { return x == c ? n * n + n + y : x * n + y; };   // node just left of line x+1
  auto right_of = [&](int x, int y) { return x == c ? n * n + y : x * n + y; };      // node just right of line x
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int up = (y + 1) % n;
      // Across the horizontal segment at height y+1.
      if (!occupied[1][up * n + x]) {
        if (x == c) {
          join(n * n + y, n * n + up);
          join(n * n + n + y, n * n + n + up);
        } else {
          join(x * n + y, x * n + up);
        }
      }
      // Across the vertical segment on the line x+1.
      const int right = (x + 1) % n;
      if (!occupied[0][y * n + right]) join(left_of(x, y), right_of(right, y));
    }
  }
  // Each side of the cut is one boundary circle, met by the image once at most.
  for (int y = 1; y < n; ++y) {
    join(n * n, n * n + y);
    join(n * n + n, n * n + n + y);
  }
  return find(n * n) == find(n * n + n);
}

}  // namespace

std::optional<TrivialityCertificate> triviality_certificate(const GridEmbedding& e) {
  const int n = e.n;
  std::vector<int> column_points(n, 0), row_points(n, 0);
  std::vector<int> column_crossings(n, 0), row_crossings(n, 0);
  for (const auto& p : e.positions) {
    ++column_points[p.x];
    ++row_points[p.y];
  }
  for (std::size_t k = 0; k < e.paths.size(); ++k) {
    GridPoint at = e.positions[e.graph.edges[k].first];
    for (auto d : e.paths[k]) {
      GridPoint next = e.step(at, d);
      if (d == Dir::Right) ++column_crossings[at.x];
      if (d == Dir::Left) ++column_crossings[next.x];
      if (d == Dir::Up) ++row_crossings[at.y];
      if (d == Dir::Down) ++row_crossings[next.y];
      ++column_points[next.x];
      ++row_points[next.y];
      at = next;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (column_points[c] == 0) return TrivialityCertificate{CertificateKind::AvoidsMeridian, c, 0, false};
  }
  for (int c = 0; c < n; ++c) {
    if (row_points[c] == 0) return TrivialityCertificate{CertificateKind::AvoidsLongitude, c, 0, false};
  }
  std::optional<TrivialityCertificate> fallback;
  for (int transpose = 0; transpose < 2; ++transpose) {
    const auto& crossings = transpose ? row_crossings : column_crossings;
    const auto kind = transpose ? CertificateKind::DualLongitude : CertificateKind::DualMeridian;
    for (int c = 0; c < n; ++c) {
      if (crossings[c] > 1) continue;
      if (crossings[c] == 0 || dual_sides_share_face(e, c, transpose)) {
        return TrivialityCertificate{kind, c, crossings[c], false};
      }
      if (!fallback) fallback = TrivialityCertificate{kind, c, crossings[c], true};
    }
  }
  return fallback;
}

ReductionResult reduction_oracle(const GridEmbedding& start, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("reduction budget must be at least 1");
  struct Node {
    GridEmbedding embedding;
    std::size_t parent;
    std::optional<Move> move;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back({start, 0, std::nullopt, 0});
  seen.emplace(start.key(), 0);

  ReductionResult result;
  std::size_t head = 0;
  while (head < nodes.size()) {
    if (result.states == budget) return result;
    const std::size_t current = head++;
    ++result.states;
    if (auto cert = triviality_certificate(nodes[current].embedding)) {
      result.outcome = ReductionOutcome::Reduced;
      result.certificate = cert;
      result.depth = nodes[current].depth;
      for (auto i = current; nodes[i].move; i = nodes[i].parent) result.moves.push_back(*nodes[i].move);
      std::reverse(result.moves.begin(), result.moves.end());
      return result;
    }
    const GridEmbedding here = nodes[current].embedding;
    const std::size_t depth = nodes[current].depth;
    for_each_candidate(here, [&](const Move& m) {
      auto next = try_apply(here, m);
      if (!next) return;
      auto [it, fresh] = seen.emplace(next->key(), nodes.size());
      if (!fresh) return;
      nodes.push_back({std::move(*next), current, m, depth + 1});
    });
  }
  result.space_exhausted = true;
  return result;
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::AvoidsMeridian: return "avoids-meridian";
    case CertificateKind::AvoidsLongitude: return "avoids-longitude";
    case CertificateKind::DualMeridian: return "dual-meridian";
    case CertificateKind::DualLongitude: return "dual-longitude";
  }
  return "?";
}

const char* to_string(ReductionOutcome o) {
  return o == ReductionOutcome::Reduced ? "Reduced" : "Exhausted";
}

}  // namespace torusgraph
