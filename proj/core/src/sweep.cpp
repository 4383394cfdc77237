#include "torusgraph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <thread>

#include "torusgraph/graph_file.hpp"
#include "torusgraph/multigraphs.hpp"
#include "torusgraph/planarity.hpp"
#include "torusgraph/reduction.hpp"

namespace torusgraph {

namespace {

constexpr std::size_t kMaxDegree = 4;

void note(SweepReport& r, std::size_t limit, std::string check, std::string detail, const GridEmbedding& e) {
  if (std::count_if(r.examples.begin(), r.examples.end(), [&](const SweepViolation& v) { return v.check == check; }) >=
      static_cast<std::ptrdiff_t>(limit)) {
    return;
  }
  r.examples.push_back({std::move(check), std::move(detail), serialize_graph_file(e.to_torus_graph(), e.n)});
}

std::uint64_t vertex_mask(const TorusGraph& g, const Cycle& c) {
  std::uint64_t m = 0;
  for (auto v : c.vertices(g)) m |= std::uint64_t{1} << (v % 64);
  return m;
}

std::string describe(HomologyClass a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

SweepReport check_instance(const GridEmbedding& e, const SweepOptions& opt) {
  SweepReport r;
  r.instances = 1;
  if (auto why = e.violation()) {
    ++r.invalid_embeddings;
    note(r, opt.max_examples, "valid", *why, e);
    return r;
  }
  const TorusGraph g = e.to_torus_graph();
  const auto verdict = classify(g, {opt.cycle_cap, false});
  switch (verdict.result) {
    case VerdictResult::Trivial: ++r.trivial; break;
    case VerdictResult::Nontrivial: ++r.nontrivial; break;
    case VerdictResult::Indeterminate: ++r.indeterminate; break;
  }
  const bool complete = verdict.stats.knot_scan_complete && verdict.stats.link_scan_complete;
  if (!complete) ++r.incomplete_scans;

  // Cycle-level properties.
  std::vector<std::pair<HomologyClass, std::uint64_t>> essential;
  const auto cycle_status = enumerate_simple_cycles(g, opt.cycle_cap, [&](const Cycle& c) {
    ++r.cycles_checked;
    auto cls = cycle_class(g, c);
    if (!is_zero_or_primitive(cls)) {
      ++r.nonprimitive_cycles;
      note(r, opt.max_examples, "primitive-cycle", "cycle class " + describe(cls), e);
    }
    if (cls.essential()) essential.emplace_back(cls, vertex_mask(g, c));
    return true;
  });
  if (cycle_status != ScanStatus::Complete) ++r.incomplete_scans;
  for (std::size_t i = 0; i < essential.size(); ++i) {
    for (std::size_t j = i + 1; j < essential.size(); ++j) {
      if (essential[i].second & essential[j].second) continue;
      ++r.disjoint_pairs_checked;
      if (intersection_det(essential[i].first, essential[j].first) != 0) {
        ++r.nonparallel_disjoint_pairs;
        note(r, opt.max_examples, "parallel-disjoint",
             describe(essential[i].first) + " and " + describe(essential[j].first), e);
      }
    }
  }

  const auto links = find_nonsplit_link(g, opt.cycle_cap);
  if (is_theta_graph(g) && e.graph.edges.size() <= 4) {
    ++r.theta_instances;
    if (links.witness) {
      ++r.theta_violations;
      note(r, opt.max_examples, "theta", "nonsplit link in a theta graph", e);
    }
    if (verdict.result == VerdictResult::Nontrivial &&
        !(verdict.reasons.size() == 1 && verdict.reasons.front() == Reason::KnottedCycle)) {
      ++r.theta_violations;
      note(r, opt.max_examples, "theta", "nontrivial theta verdict without a knotted cycle", e);
    }
  }

  const bool planar = !verdict.has(Reason::NonplanarAbstractGraph);
  if (planar && complete && links.status == ScanStatus::Complete) {
    const auto prim = is_primitive(g, opt.tree_cap);
    if (prim.value != Tristate::Indeterminate) {
      ++r.chain_checked;
      const bool lhs = verdict.result == VerdictResult::Trivial;
      const bool rhs = prim.value == Tristate::True && !links.witness;
      if (lhs != rhs) {
        ++r.chain_mismatches;
        note(r, opt.max_examples, "chain",
             std::string("classify ") + to_string(verdict.result) + ", primitive " +
                 (prim.value == Tristate::True ? "true" : "false") + ", link " + (links.witness ? "yes" : "no"),
             e);
      }
    }
  }

  const auto red = reduction_oracle(e, opt.budget);
  r.oracle_states = red.states;
  r.max_oracle_states = red.states;
  if (red.outcome == ReductionOutcome::Reduced) {
    ++r.reduced;
    if (red.certificate->separated) ++r.reduced_separated;
    r.max_reduction_depth = red.depth;
  } else {
    ++r.exhausted;
  }
  if (verdict.result == VerdictResult::Trivial && red.outcome == ReductionOutcome::Exhausted) {
    ++r.trivial_but_exhausted;
    note(r, opt.max_examples, "trivial-exhausted",
         "oracle states " + std::to_string(red.states) + (red.space_exhausted ? ", space exhausted" : ""), e);
  }
  if ((verdict.knot || verdict.link) && red.outcome == ReductionOutcome::Reduced) {
    ++r.witness_but_reduced;
    note(r, opt.max_examples, "witness-reduced", "reduced in " + std::to_string(red.depth) + " moves", e);
  }
  return r;
}

void merge(SweepReport& into, const SweepReport& r, std::size_t max_examples) {
  into.instances += r.instances;
  into.trivial += r.trivial;
  into.nontrivial += r.nontrivial;
  into.indeterminate += r.indeterminate;
  into.reduced += r.reduced;
  into.exhausted += r.exhausted;
  into.reduced_separated += r.reduced_separated;
  into.oracle_states += r.oracle_states;
  into.max_oracle_states = std::max(into.max_oracle_states, r.max_oracle_states);
  into.max_reduction_depth = std::max(into.max_reduction_depth, r.max_reduction_depth);
  into.cycles_checked += r.cycles_checked;
  into.disjoint_pairs_checked += r.disjoint_pairs_checked;
  into.theta_instances += r.theta_instances;
  into.chain_checked += r.chain_checked;
  into.invalid_embeddings += r.invalid_embeddings;
  into.trivial_but_exhausted += r.trivial_but_exhausted;
  into.witness_but_reduced += r.witness_but_reduced;
  into.nonparallel_disjoint_pairs += r.nonparallel_disjoint_pairs;
  into.nonprimitive_cycles += r.nonprimitive_cycles;
  into.theta_violations += r.theta_violations;
  into.chain_mismatches += r.chain_mismatches;
  into.incomplete_scans += r.incomplete_scans;
  for (const auto& v : r.examples) {
    auto same = std::count_if(into.examples.begin(), into.examples.end(),
                              [&](const SweepViolation& w) { return w.check == v.check; });
    if (same < static_cast<std::ptrdiff_t>(max_examples)) into.examples.push_back(v);
  }
}

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

HomologyClass sign_normal(HomologyClass a) {
  if (a.p < 0 || (a.p == 0 && a.q < 0)) return -a;
  return a;
}

bool fits_oriented(const std::vector<HomologyClass>& classes) {
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (auto raw : classes) {
    auto a = sign_normal(raw);
    if (a.p == 0) {
      if (a.q != 1) return false;
    } else if (a.p == 1) {
      lo = any ? std::min(lo, a.q) : a.q;
      hi = any ? std::max(hi, a.q) : a.q;
      any = true;
    } else {
      return false;
    }
  }
  return !any || hi - lo <= 1;
}

}  // namespace

bool SweepReport::consistent() const {
  return invalid_embeddings == 0 && trivial_but_exhausted == 0 && witness_but_reduced == 0 &&
         nonparallel_disjoint_pairs == 0 && nonprimitive_cycles == 0 && theta_violations == 0 &&
         chain_mismatches == 0;
}

bool fits_unknot_family(const std::vector<HomologyClass>& classes) {
  std::vector<HomologyClass> essential, swapped;
  for (auto a : classes) {
    if (!a.essential()) continue;
    essential.push_back(a);
    swapped.push_back({a.q, a.p});
  }
  return fits_oriented(essential) || fits_oriented(swapped);
}

SweepReport run_sweep(const SweepOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.options = options;
  const unsigned threads = thread_count(options.threads);
  EnumerationOptions eo;
  eo.max_total_segments = options.max_segments;

  for (const auto& g : connected_multigraphs(options.max_edges, kMaxDegree)) {
    ++report.graphs;
    if (!is_planar(g).planar) {
      ++report.nonplanar_graphs_skipped;
      continue;
    }
    const auto embeddings = collect_grid_embeddings(g, options.grid, eo);
    std::vector<SweepReport> results(embeddings.size());
    parallel_for(embeddings.size(), threads, [&](std::size_t i) { results[i] = check_instance(embeddings[i], options); });
    for (const auto& r : results) merge(report, r, options.max_examples);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

BouquetFamilyReport bouquet_family_check(int grid, std::size_t max_loops, std::size_t max_examples) {
  const auto t0 = std::chrono::steady_clock::now();
  BouquetFamilyReport report;
  report.grid = grid;
  report.max_loops = max_loops;
  report.embeddings_by_loop_count.assign(max_loops + 1, 0);
  std::set<std::vector<HomologyClass>> seen;

  auto keep = [&](const char* check, std::string detail, const GridEmbedding& e) {
    auto same = std::count_if(report.examples.begin(), report.examples.end(),
                              [&](const SweepViolation& v) { return v.check == check; });
    if (same < static_cast<std::ptrdiff_t>(max_examples)) {
      report.examples.push_back({check, std::move(detail), serialize_graph_file(e.to_torus_graph(), e.n)});
    }
  };

  for (std::size_t k = 1; k <= max_loops; ++k) {
    AbstractGraph bouquet{1, std::vector<EndpointPair>(k, EndpointPair{0, 0})};
    enumerate_grid_embeddings(bouquet, grid, {}, [&](const GridEmbedding& e) {
      ++report.embeddings_by_loop_count[k];
      std::vector<HomologyClass> classes;
      bool knotted = false;
      for (std::size_t i = 0; i < k; ++i) {
        auto a = HomologyClass::from(e.lift(i));
        knotted = knotted || knot_type(a, TorusKind::Standard).knotted();
        classes.push_back(a);
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          auto d = intersection_det(classes[i], classes[j]);
          if (d > 1 || d < -1) {
            ++report.det_violations;
            keep("det", describe(classes[i]) + " and " + describe(classes[j]), e);
          }
        }
      }
      std::vector<HomologyClass> key;
      for (auto a : classes) {
        if (a.essential()) key.push_back(sign_normal(a));
      }
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) {
        ++report.distinct_class_sets;
        if (knotted) ++report.knotted_sets;
      }
      if (!knotted && !fits_unknot_family(classes)) {
        ++report.family_violations;
        std::string detail;
        for (auto a : classes) detail += describe(a) + " ";
        keep("family", detail, e);
      }
      return true;
    });
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace torusgraph
