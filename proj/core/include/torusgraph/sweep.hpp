#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torusgraph/classify.hpp"
#include "torusgraph/grid_embedding.hpp"
#include "torusgraph/homology.hpp"

namespace torusgraph {

struct SweepOptions {
  int grid = 4;
  std::size_t max_edges = 6;
  /// Reduction-oracle budget per instance, in BFS states.
  std::size_t budget = 100'000;
  /// Total path length per embedding; keeps the corpus finite at desk scale.
  std::size_t max_segments = 10;
  std::size_t cycle_cap = kDefaultCycleCap;
  std::size_t tree_cap = kDefaultTreeCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Violation records kept per criterion.
  std::size_t max_examples = 5;
};

struct SweepViolation {
  std::string check;
  std::string detail;
  std::string instance;  // graph-file text of the offending embedding
};

/// Counts and violations from the exhaustive consistency sweep over every
/// grid embedding of every connected multigraph in range.
struct SweepReport {
  SweepOptions options;
  std::size_t graphs = 0;
  std::size_t nonplanar_graphs_skipped = 0;
  std::size_t instances = 0;
  std::size_t trivial = 0;
  std::size_t nontrivial = 0;
  std::size_t indeterminate = 0;
  std::size_t reduced = 0;
  std::size_t exhausted = 0;
  /// Reduced instances whose certificate is a separated dual circle.
  std::size_t reduced_separated = 0;
  std::size_t oracle_states = 0;
  std::size_t max_oracle_states = 0;
  std::size_t max_reduction_depth = 0;
  std::size_t cycles_checked = 0;
  std::size_t disjoint_pairs_checked = 0;
  std::size_t theta_instances = 0;
  std::size_t chain_checked = 0;

  // Zero in a consistent sweep.
  std::size_t invalid_embeddings = 0;
  std::size_t trivial_but_exhausted = 0;
  std::size_t witness_but_reduced = 0;
  std::size_t nonparallel_disjoint_pairs = 0;
  std::size_t nonprimitive_cycles = 0;
  std::size_t theta_violations = 0;
  std::size_t chain_mismatches = 0;
  std::size_t incomplete_scans = 0;

  std::vector<SweepViolation> examples;
  double seconds = 0;

  bool consistent() const;
};

SweepReport run_sweep(const SweepOptions& options);

/// True if the essential classes, up to sign, fit in one family
/// {(0,1), (1,n), (1,n+1)} or its coordinate swap {(1,0), (n,1), (n+1,1)}.
bool fits_unknot_family(const std::vector<HomologyClass>& classes);

struct BouquetFamilyReport {
  int grid = 4;
  std::size_t max_loops = 3;
  std::vector<std::size_t> embeddings_by_loop_count;  // index = loops
  std::size_t distinct_class_sets = 0;
  std::size_t knotted_sets = 0;
  std::size_t det_violations = 0;
  std::size_t family_violations = 0;
  std::vector<SweepViolation> examples;
  double seconds = 0;
};

/// Every single-vertex bouquet with 1..max_loops loops on the grid: pairwise
/// |intersection_det| <= 1 between loop classes, and every knot-free class
/// set fits an unknot family.
BouquetFamilyReport bouquet_family_check(int grid, std::size_t max_loops, std::size_t max_examples = 5);

}  // namespace torusgraph
