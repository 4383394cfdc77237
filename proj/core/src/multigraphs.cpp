#include "torusgraph/multigraphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace torusgraph {

namespace {

std::vector<std::size_t> degrees(const AbstractGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<EndpointPair> relabel(const AbstractGraph& g, const std::vector<std::size_t>& label) {
  std::vector<EndpointPair> out;
  out.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    auto a = label[u], b = label[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AbstractGraph canonical_form(const AbstractGraph& g) {
  const auto deg = degrees(g);
  std::vector<std::size_t> loops(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    if (u == v) ++loops[u];
  }
  // Vertices in invariant order; permutations only shuffle within ties.
  std::vector<std::size_t> order(g.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  auto invariant = [&](std::size_t v) { return std::make_pair(deg[v], loops[v]); };
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return invariant(a) < invariant(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) of ties
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && invariant(order[j]) == invariant(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<EndpointPair> best;
  bool have = false;
  std::vector<std::size_t> label(g.vertex_count);
  auto search = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      for (std::size_t pos = 0; pos < order.size(); ++pos) label[order[pos]] = pos;
      auto candidate = relabel(g, label);
      if (!have || candidate < best) {
        best = std::move(candidate);
        have = true;
      }
      return;
    }
    auto [b, e] = blocks[block];
    auto first = order.begin() + static_cast<std::ptrdiff_t>(b);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(e);
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  search(search, 0);
  return {g.vertex_count, best};
}

std::vector<AbstractGraph> connected_multigraphs(std::size_t max_edges, std::size_t max_degree) {
  std::vector<AbstractGraph> all;
  std::vector<AbstractGraph> level{AbstractGraph{1, {}}};
  all.push_back(level.front());
  for (std::size_t k = 1; k <= max_edges; ++k) {
    std::set<std::pair<std::size_t, std::vector<EndpointPair>>> seen;
    std::vector<AbstractGraph> next;
    auto offer = [&](AbstractGraph h) {
      auto deg = degrees(h);
      if (std::any_of(deg.begin(), deg.end(), [&](std::size_t d) { return d > max_degree; })) return;
      auto c = canonical_form(h);
      if (seen.emplace(c.vertex_count, c.edges).second) next.push_back(std::move(c));
    };
    for (const auto& g : level) {
      for (std::size_t u = 0; u < g.vertex_count; ++u) {
        for (std::size_t v = u; v < g.vertex_count; ++v) {
          AbstractGraph h = g;
          h.edges.emplace_back(u, v);
          offer(std::move(h));
        }
        AbstractGraph pendant = g;
        pendant.vertex_count += 1;
        pendant.edges.emplace_back(u, g.vertex_count);
        offer(std::move(pendant));
      }
    }
    std::sort(next.begin(), next.end(), [](const AbstractGraph& a, const AbstractGraph& b) {
      return std::tie(a.vertex_count, a.edges) < std::tie(b.vertex_count, b.edges);
    });
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace torusgraph
