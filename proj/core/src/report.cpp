#include "torusgraph/report.hpp"

#include <sstream>

#include "json.hpp"

namespace torusgraph {

namespace {

using nlohmann::json;

std::string class_text(HomologyClass a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

json cycle_json(const CycleReport& c) { return {{"edges", c.edges}, {"class", {c.cls.p, c.cls.q}}}; }

json stats_json(const ScanStats& s) {
  return {{"knot_cycles_scanned", s.knot_cycles_scanned},
          {"link_cycles_scanned", s.link_cycles_scanned},
          {"link_pairs_checked", s.link_pairs_checked},
          {"knot_scan_complete", s.knot_scan_complete},
          {"link_scan_complete", s.link_scan_complete},
          {"link_scan_skipped", s.link_scan_skipped}};
}

}  // namespace

CycleReport describe_cycle(const TorusGraph& g, const Cycle& c) {
  CycleReport out;
  for (const auto& s : c.steps) out.edges.push_back((s.forward ? "" : "-") + g.edge(s.edge).id);
  out.cls = cycle_class(g, c);
  return out;
}

Report make_report(const TorusGraph& g, const Verdict& v) {
  Report r;
  r.verdict = to_string(v.result);
  for (auto reason : v.reasons) r.reasons.emplace_back(to_string(reason));
  r.torus = g.torus() == TorusKind::Standard ? "standard" : "knotted";
  if (v.knot) {
    r.knot = describe_cycle(g, v.knot->cycle);
    r.knot_type = to_string(v.knot->verdict.status);
  }
  if (v.link) {
    for (const auto& c : v.link->cycles) r.link.push_back(describe_cycle(g, c));
  }
  if (v.nonplanarity) {
    r.nonplanarity = to_string(v.nonplanarity->kind);
    for (auto [a, b] : v.nonplanarity->certificate) r.kuratowski.emplace_back(g.vertex(a).id, g.vertex(b).id);
  }
  r.stats = v.stats;
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "verdict: " << r.verdict << '\n';
  os << "torus: " << r.torus << '\n';
  os << "reasons: " << (r.reasons.empty() ? "none" : join(r.reasons, ", ")) << '\n';
  if (!r.nonplanarity.empty()) {
    os << "nonplanarity: " << r.nonplanarity << '\n';
    if (!r.kuratowski.empty()) {
      os << "  kuratowski edges:";
      for (const auto& [a, b] : r.kuratowski) os << ' ' << a << '-' << b;
      os << '\n';
    }
  }
  if (r.knot) {
    os << "knot: " << r.knot_type << " class " << class_text(r.knot->cls) << '\n';
    os << "  cycle: " << join(r.knot->edges, " ") << '\n';
  }
  for (std::size_t i = 0; i < r.link.size(); ++i) {
    os << "link component " << i + 1 << ": class " << class_text(r.link[i].cls) << '\n';
    os << "  cycle: " << join(r.link[i].edges, " ") << '\n';
  }
  const auto& s = r.stats;
  os << "scan: knot cycles " << s.knot_cycles_scanned << (s.knot_scan_complete ? " (complete)" : " (incomplete)");
  os << ", link cycles " << s.link_cycles_scanned << ", link pairs " << s.link_pairs_checked;
  if (s.link_scan_skipped) os << " (skipped)";
  else os << (s.link_scan_complete ? " (complete)" : " (incomplete)");
  os << '\n';
  return os.str();
}

std::string render_machine(const Report& r) {
  json j;
  j["verdict"] = r.verdict;
  j["reasons"] = r.reasons;
  j["torus"] = r.torus;
  j["knot"] = r.knot ? json{{"type", r.knot_type}, {"cycle", cycle_json(*r.knot)}} : json(nullptr);
  json link = json::array();
  for (const auto& c : r.link) link.push_back(cycle_json(c));
  j["link"] = link;
  if (r.nonplanarity.empty()) {
    j["nonplanarity"] = nullptr;
  } else {
    json edges = json::array();
    for (const auto& [a, b] : r.kuratowski) edges.push_back({a, b});
    j["nonplanarity"] = {{"kind", r.nonplanarity}, {"edges", edges}};
  }
  j["stats"] = stats_json(r.stats);
  return j.dump();
}

std::string render_text(const SweepReport& r) {
  std::ostringstream os;
  const auto& o = r.options;
  os << "sweep: grid " << o.grid << ", edges <= " << o.max_edges << ", segments <= " << o.max_segments
     << ", budget " << o.budget << '\n';
  os << "graphs " << r.graphs << " (nonplanar skipped " << r.nonplanar_graphs_skipped << "), instances "
     << r.instances << '\n';
  os << "verdicts: trivial " << r.trivial << ", nontrivial " << r.nontrivial << ", indeterminate "
     << r.indeterminate << '\n';
  os << "oracle: reduced " << r.reduced << " (separated dual " << r.reduced_separated << "), exhausted "
     << r.exhausted << ", states " << r.oracle_states
     << " (max " << r.max_oracle_states << "), max depth " << r.max_reduction_depth << '\n';
  os << "checked: cycles " << r.cycles_checked << ", disjoint pairs " << r.disjoint_pairs_checked << ", theta "
     << r.theta_instances << ", chain " << r.chain_checked << '\n';
  os << "violations: invalid " << r.invalid_embeddings << ", trivial-exhausted " << r.trivial_but_exhausted
     << ", witness-reduced " << r.witness_but_reduced << ", parallel-disjoint " << r.nonparallel_disjoint_pairs
     << ", primitive-cycle " << r.nonprimitive_cycles << ", theta " << r.theta_violations << ", chain "
     << r.chain_mismatches << '\n';
  os << "incomplete scans " << r.incomplete_scans << '\n';
  for (const auto& v : r.examples) {
    os << "\n[" << v.check << "] " << v.detail << '\n' << v.instance;
  }
  os << "time " << r.seconds << " s\n";
  os << (r.consistent() ? "CONSISTENT" : "INCONSISTENT") << '\n';
  return os.str();
}

std::string render_machine(const SweepReport& r) {
  json j;
  j["options"] = {{"grid", r.options.grid},
                  {"max_edges", r.options.max_edges},
                  {"max_segments", r.options.max_segments},
                  {"budget", r.options.budget}};
  j["graphs"] = r.graphs;
  j["nonplanar_graphs_skipped"] = r.nonplanar_graphs_skipped;
  j["instances"] = r.instances;
  j["verdicts"] = {{"trivial", r.trivial}, {"nontrivial", r.nontrivial}, {"indeterminate", r.indeterminate}};
  j["oracle"] = {{"reduced", r.reduced},
                 {"reduced_separated", r.reduced_separated},
                 {"exhausted", r.exhausted},
                 {"states", r.oracle_states},
                 {"max_states", r.max_oracle_states},
                 {"max_depth", r.max_reduction_depth}};
  j["checked"] = {{"cycles", r.cycles_checked},
                  {"disjoint_pairs", r.disjoint_pairs_checked},
                  {"theta", r.theta_instances},
                  {"chain", r.chain_checked}};
  j["violations"] = {{"invalid", r.invalid_embeddings},
                     {"trivial_exhausted", r.trivial_but_exhausted},
                     {"witness_reduced", r.witness_but_reduced},
                     {"parallel_disjoint", r.nonparallel_disjoint_pairs},
                     {"primitive_cycle", r.nonprimitive_cycles},
                     {"theta", r.theta_violations},
                     {"chain", r.chain_mismatches}};
  j["incomplete_scans"] = r.incomplete_scans;
  json ex = json::array();
  for (const auto& v : r.examples) ex.push_back({{"check", v.check}, {"detail", v.detail}, {"instance", v.instance}});
  j["examples"] = ex;
  j["seconds"] = r.seconds;
  j["consistent"] = r.consistent();
  return j.dump();
}

std::string render_text(const BouquetFamilyReport& r) {
  std::ostringstream os;
  os << "bouquets on grid " << r.grid << ", loops <= " << r.max_loops << '\n';
  for (std::size_t k = 1; k < r.embeddings_by_loop_count.size(); ++k) {
    os << "  " << k << " loop(s): " << r.embeddings_by_loop_count[k] << " embeddings\n";
  }
  os << "distinct class sets " << r.distinct_class_sets << " (knotted " << r.knotted_sets << ")\n";
  os << "violations: det " << r.det_violations << ", family " << r.family_violations << '\n';
  for (const auto& v : r.examples) os << "\n[" << v.check << "] " << v.detail << '\n' << v.instance;
  os << "time " << r.seconds << " s\n";
  return os.str();
}

}  // namespace torusgraph
