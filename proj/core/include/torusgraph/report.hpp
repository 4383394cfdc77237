#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusgraph/classify.hpp"
#include "torusgraph/sweep.hpp"

namespace torusgraph {

/// A witness cycle by edge ids; a leading '-' marks an edge traversed v to u.
struct CycleReport {
  std::vector<std::string> edges;
  HomologyClass cls;
};

struct Report {
  std::string verdict;
  std::vector<std::string> reasons;
  std::string torus;
  std::optional<CycleReport> knot;
  std::string knot_type;
  std::vector<CycleReport> link;
  std::string nonplanarity;
  /// Kuratowski subdivision edges as vertex-id pairs.
  std::vector<std::pair<std::string, std::string>> kuratowski;
  ScanStats stats;
};

CycleReport describe_cycle(const TorusGraph& g, const Cycle& c);
Report make_report(const TorusGraph& g, const Verdict& v);

/// Multi-line, for people.
std::string render_text(const Report& r);
/// One JSON object on one line.
std::string render_machine(const Report& r);

std::string render_text(const SweepReport& r);
std::string render_machine(const SweepReport& r);
std::string render_text(const BouquetFamilyReport& r);

}  // namespace torusgraph
