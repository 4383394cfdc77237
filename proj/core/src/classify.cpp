#include "torusgraph/classify.hpp"

#include <algorithm>
#include <cstdlib>

namespace torusgraph {

KnotVerdict knot_type(HomologyClass a, TorusKind kind) {
  if (!is_zero_or_primitive(a)) {
    throw StructuralError("class is not realised by a simple closed curve");
  }
  const auto abs_p = std::llabs(a.p);
  const auto abs_q = std::llabs(a.q);
  if (kind == TorusKind::NonstandardKnotted) {
    return {a.p == 0 ? KnotStatus::Unknot : KnotStatus::NontrivialSatellite, a};
  }
  bool unknot = !a.essential() || abs_p == 1 || abs_q == 1;
  return {unknot ? KnotStatus::Unknot : KnotStatus::NontrivialTorusKnot, a};
}

KnotSearch find_knotted_cycle(const TorusGraph& g, std::size_t cap) {
  KnotSearch out;
  out.status = enumerate_simple_cycles(g, cap, [&](const Cycle& c) {
    ++out.cycles_scanned;
    auto verdict = knot_type(cycle_class(g, c), g.torus());
    if (!verdict.knotted()) return true;
    out.witness = KnotWitness{c, verdict};
    return false;
  });
  return out;
}

namespace {

bool is_meridian_or_longitude(HomologyClass h) {
  return (h.p == 0 && std::llabs(h.q) == 1) || (h.q == 0 && std::llabs(h.p) == 1);
}

}  // namespace

LinkSearch find_nonsplit_link(const TorusGraph& g, std::size_t cap) {
  if (g.torus() != TorusKind::Standard) {
    throw StructuralError("link scan is defined on the standard torus only");
  }
  struct Candidate {
    Cycle cycle;
    HomologyClass cls;
    std::vector<bool> touches;
  };
  LinkSearch out;
  std::vector<Candidate> candidates;
  out.status = enumerate_simple_cycles(g, cap, [&](const Cycle& c) {
    ++out.cycles_scanned;
    auto h = cycle_class(g, c);
    if (!h.essential() || is_meridian_or_longitude(h)) return true;
    std::vector<bool> touches(g.vertex_count(), false);
    for (auto v : c.vertices(g)) touches[v] = true;
    candidates.push_back({c, h, std::move(touches)});
    return true;
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      ++out.pairs_checked;
      bool disjoint = true;
      for (VertexIndex v = 0; v < g.vertex_count() && disjoint; ++v) {
        disjoint = !(candidates[i].touches[v] && candidates[j].touches[v]);
      }
      if (!disjoint) continue;
      out.witness = LinkWitness{{candidates[i].cycle, candidates[j].cycle},
                                {candidates[i].cls, candidates[j].cls}};
      return out;
    }
  }
  return out;
}

Bouquet contract_to_bouquet(const TorusGraph& g, const SpanningTree& t) {
  auto labels = component_labels(g);
  if (std::any_of(labels.begin(), labels.end(), [](std::size_t l) { return l != 0; })) {
    throw StructuralError("bouquet contraction needs a connected graph; split components first");
  }
  Bouquet b;
  b.base = t.roots.empty() ? 0 : t.roots.front();
  for (const auto& c : fundamental_cycles(g, t)) b.loop_classes.push_back(cycle_class(g, c));
  return b;
}

bool is_bouquet_trivial(const Bouquet& b, TorusKind kind) {
  return std::all_of(b.loop_classes.begin(), b.loop_classes.end(),
                     [&](HomologyClass h) { return !knot_type(h, kind).knotted(); });
}

PrimitivityResult is_primitive(const TorusGraph& g, std::size_t tree_cap) {
  PrimitivityResult out;
  for (const auto& part : components(g)) {
    if (part.edge_count() == 0) continue;
    std::vector<EndpointPair> pairs;
    for (const auto& e : part.edges()) pairs.emplace_back(e.u, e.v);
    bool failed = false;
    auto status = enumerate_spanning_trees(
        part.vertex_count(), pairs, tree_cap, [&](const std::vector<std::size_t>& edges) {
          ++out.trees_checked;
          SpanningTree t{edges, {0}};
          if (is_bouquet_trivial(contract_to_bouquet(part, t), part.torus())) return true;
          // Map back to edge indices of g.
          SpanningTree original;
          for (auto e : edges) original.edges.push_back(*g.find_edge(part.edge(e).id));
          std::sort(original.edges.begin(), original.edges.end());
          original.roots.push_back(*g.find_vertex(part.vertex(0).id));
          out.counterexample = std::move(original);
          failed = true;
          return false;
        });
    if (failed) {
      out.value = Tristate::False;
      return out;
    }
    if (status == TreeScanStatus::CapExceeded) out.value = Tristate::Indeterminate;
  }
  return out;
}

PrimitivityResult is_free_family(const TorusGraph& g, std::size_t tree_cap) {
  return is_primitive(g, tree_cap);
}

bool Verdict::has(Reason r) const {
  return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

bool is_theta_graph(const TorusGraph& g) {
  if (g.vertex_count() != 2 || g.edge_count() == 0) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [](const EdgeGeometry& e) { return e.is_loop(); });
}

Verdict classify(const TorusGraph& g, const ClassifyOptions& options) {
  if (options.validate) {
    auto report = validate_embedding(g);
    if (!report.ok) {
      const auto& v = report.violations.front();
      throw StructuralError("not an embedding: " + v.edge_a + " meets " + v.edge_b);
    }
  }
  Verdict verdict;

  auto planarity = is_planar(AbstractGraph::from(g));
  if (!planarity.planar) {
    verdict.reasons.push_back(Reason::NonplanarAbstractGraph);
    verdict.nonplanarity = std::move(planarity);
  }

  auto knots = find_knotted_cycle(g, options.cycle_cap);
  verdict.stats.knot_cycles_scanned = knots.cycles_scanned;
  verdict.stats.knot_scan_complete = knots.status != ScanStatus::CapExceeded;
  if (knots.witness) {
    verdict.reasons.push_back(Reason::KnottedCycle);
    verdict.knot = std::move(knots.witness);
  }

  // No two disjoint cycles exist in a theta graph, and on a knotted torus any
  // linking pair already carries a satellite knot.
  if (g.torus() == TorusKind::Standard && !is_theta_graph(g)) {
    auto links = find_nonsplit_link(g, options.cycle_cap);
    verdict.stats.link_cycles_scanned = links.cycles_scanned;
    verdict.stats.link_pairs_checked = links.pairs_checked;
    verdict.stats.link_scan_complete = links.status != ScanStatus::CapExceeded;
    if (links.witness) {
      verdict.reasons.push_back(Reason::NonsplitLink);
      verdict.link = std::move(links.witness);
    }
  } else {
    verdict.stats.link_scan_skipped = true;
  }

  if (!verdict.reasons.empty()) {
    verdict.result = VerdictResult::Nontrivial;
  } else if (!verdict.stats.knot_scan_complete || !verdict.stats.link_scan_complete) {
    verdict.result = VerdictResult::Indeterminate;
    verdict.reasons.push_back(Reason::ScanIncomplete);
  } else {
    verdict.result = VerdictResult::Trivial;
  }
  return verdict;
}

const char* to_string(KnotStatus s) {
  switch (s) {
    case KnotStatus::Unknot: return "Unknot";
    case KnotStatus::NontrivialTorusKnot: return "NontrivialTorusKnot";
    case KnotStatus::NontrivialSatellite: return "NontrivialSatellite";
  }
  return "?";
}

const char* to_string(VerdictResult r) {
  switch (r) {
    case VerdictResult::Trivial: return "Trivial";
    case VerdictResult::Nontrivial: return "Nontrivial";
    case VerdictResult::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::NonplanarAbstractGraph: return "NonplanarAbstractGraph";
    case Reason::KnottedCycle: return "KnottedCycle";
    case Reason::NonsplitLink: return "NonsplitLink";
    case Reason::ScanIncomplete: return "ScanIncomplete";
  }
  return "?";
}

}  // namespace torusgraph
