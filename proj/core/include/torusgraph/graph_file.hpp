#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torusgraph/torus_graph.hpp"

namespace torusgraph {

/// Syntax or invariant violation in a graph file; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

struct GraphFile {
  TorusGraph graph;
  std::optional<int> grid;
};

// Line-oriented format, '#' starts a comment:
//
//   torus standard|knotted [grid <n>]
//   vertex <id> <x> <y>
//   edge <id> <u> <v> : <x1> <y1> ; <x2> <y2> ; ...
//
// Coordinates are integers or num/den. Vertex coordinates lie in [0,1);
// edge points live in the universal cover, start at coords(u) and end at
// coords(v) plus an integer vector.
GraphFile parse_graph_document(std::string_view text);
TorusGraph parse_graph_file(std::string_view text);

/// Several documents back to back, each opened by its own `torus` line.
std::vector<GraphFile> parse_graph_stream(std::string_view text);

std::string serialize_graph_file(const TorusGraph& g, std::optional<int> grid = std::nullopt);

/// Integer or num/den; throws std::invalid_argument.
Rational parse_rational(std::string_view token);

}  // namespace torusgraph
