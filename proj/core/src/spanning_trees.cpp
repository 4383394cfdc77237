#include "torusgraph/spanning_trees.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace torusgraph {

namespace {

class ExchangeSearch {
 public:
  ExchangeSearch(std::size_t n, std::span<const EndpointPair> edges) : n_(n), edges_(edges) {
    for (const auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    root_.assign(edges_.size(), false);
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto a = find(edges_[e].first), b = find(edges_[e].second);
      if (a == b) continue;
      parent[a] = b;
      root_[e] = true;
    }
  }

  const std::vector<bool>& root() const { return root_; }

  // Edges of the forest path between a and b, or nullopt if disconnected.
  std::optional<std::vector<std::size_t>> path(const std::vector<bool>& tree, std::size_t a,
                                               std::size_t b, std::size_t skip) const {
    std::vector<std::size_t> via(n_, kNone), prev(n_, kNone);
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x == b) break;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!tree[e] || e == skip) continue;
        auto [u, v] = edges_[e];
        std::size_t y;
        if (u == x) y = v;
        else if (v == x) y = u;
        else continue;
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = e;
        prev[y] = x;
        stack.push_back(y);
      }
    }
    if (!seen[b]) return std::nullopt;
    std::vector<std::size_t> out;
    for (auto x = b; x != a; x = prev[x]) out.push_back(via[x]);
    return out;
  }

  // (f, g) such that parent(T) = T + f - g; requires T != root.
  std::pair<std::size_t, std::size_t> parent_exchange(const std::vector<bool>& tree) const {
    std::size_t f = kNone;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (root_[e] && !tree[e]) {
        f = e;
        break;
      }
    }
    auto cyc = path(tree, edges_[f].first, edges_[f].second, kNone);
    std::size_t g = kNone;
    for (auto e : *cyc) {
      if (!root_[e]) g = std::min(g, e);
    }
    return {f, g};
  }

  bool is_root(const std::vector<bool>& tree) const { return tree == root_; }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t n_;
  std::span<const EndpointPair> edges_;
  std::vector<bool> root_;
};

}  // namespace

TreeScanStatus enumerate_spanning_trees(std::size_t vertex_count, std::span<const EndpointPair> edges,
                                        std::size_t cap,
                                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (cap == 0) throw std::invalid_argument("tree cap must be at least 1");
  ExchangeSearch search(vertex_count, edges);
  std::size_t emitted = 0;
  enum class Outcome { Continue, Stop, Cap };

  auto emit = [&](const std::vector<bool>& tree) {
    if (emitted == cap) return Outcome::Cap;
    ++emitted;
    std::vector<std::size_t> list;
    for (std::size_t e = 0; e < tree.size(); ++e) {
      if (tree[e]) list.push_back(e);
    }
    return visit(list) ? Outcome::Continue : Outcome::Stop;
  };

  std::function<Outcome(std::vector<bool>&)> descend = [&](std::vector<bool>& tree) -> Outcome {
    if (auto r = emit(tree); r != Outcome::Continue) return r;
    const auto& root = search.root();
    // Children drop a root edge f and take a non-root edge g.
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (!tree[f] || !root[f]) continue;
      for (std::size_t g = 0; g < edges.size(); ++g) {
        if (tree[g] || root[g] || edges[g].first == edges[g].second) continue;
        // T - f + g is a forest iff g's endpoints are separated once f is gone.
        if (search.path(tree, edges[g].first, edges[g].second, f)) continue;
        if (!search.path(tree, edges[g].first, edges[g].second, ExchangeSearch::kNone)) continue;
        tree[f] = false;
        tree[g] = true;
        auto [pf, pg] = search.parent_exchange(tree);
        Outcome r = Outcome::Continue;
        if (pf == f && pg == g) r = descend(tree);
        tree[g] = false;
        tree[f] = true;
        if (r != Outcome::Continue) return r;
      }
    }
    return Outcome::Continue;
  };

  std::vector<bool> tree = search.root();
  switch (descend(tree)) {
    case Outcome::Continue: return TreeScanStatus::Complete;
    case Outcome::Stop: return TreeScanStatus::Stopped;
    case Outcome::Cap: return TreeScanStatus::CapExceeded;
  }
  return TreeScanStatus::Complete;
}

}  // namespace torusgraph
