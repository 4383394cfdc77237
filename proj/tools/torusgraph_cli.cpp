#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "torusgraph/classify.hpp"
#include "torusgraph/graph_file.hpp"
#include "torusgraph/grid_embedding.hpp"
#include "torusgraph/report.hpp"
#include "torusgraph/svg.hpp"
#include "torusgraph/sweep.hpp"

namespace tg = torusgraph;

namespace {

enum Exit : int { kOk = 0, kNontrivial = 1, kIndeterminate = 2, kInputError = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tg::TorusGraph load(const std::string& path) {
  try {
    return tg::parse_graph_file(read_file(path));
  } catch (const tg::ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.reason());
  }
}

int exit_for(tg::VerdictResult r) {
  switch (r) {
    case tg::VerdictResult::Trivial: return kOk;
    case tg::VerdictResult::Nontrivial: return kNontrivial;
    case tg::VerdictResult::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

std::string class_text(tg::HomologyClass a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

void print_cycle(const tg::TorusGraph& g, const tg::Cycle& c) {
  auto d = tg::describe_cycle(g, c);
  std::cout << "class " << class_text(d.cls) << " cycle";
  for (const auto& e : d.edges) std::cout << ' ' << e;
  std::cout << '\n';
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

tg::AbstractGraph builtin_or_file(const std::string& source) {
  if (source == "builtin:K5") return tg::AbstractGraph::complete(5);
  if (source == "builtin:K33") return tg::AbstractGraph::complete_bipartite(3, 3);
  if (source == "builtin:theta3") return tg::AbstractGraph::theta(3);
  if (source.rfind("builtin:", 0) == 0) throw InputError("unknown builtin graph " + source);
  return tg::AbstractGraph::from(load(source));
}

int cmd_validate(const std::string& path) {
  auto g = load(path);
  auto rep = tg::validate_embedding(g);
  if (rep.ok) {
    std::cout << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    return kOk;
  }
  for (const auto& v : rep.violations) {
    std::cout << (v.vertex_contact ? "vertex contact " : "crossing ") << v.edge_a << ' ' << v.edge_b << " at ("
              << tg::to_string(v.point.x) << ", " << tg::to_string(v.point.y) << ") translate (" << v.translate.x
              << ", " << v.translate.y << ")\n";
  }
  return kNontrivial;
}

int cmd_classify(const std::string& path, std::size_t cap, const std::string& format) {
  auto g = load(path);
  tg::ClassifyOptions opt;
  opt.cycle_cap = cap;
  auto verdict = tg::classify(g, opt);
  auto report = tg::make_report(g, verdict);
  std::cout << (format == "machine" ? tg::render_machine(report) + "\n" : tg::render_text(report));
  return exit_for(verdict.result);
}

int cmd_knots(const std::string& path, std::size_t cap) {
  auto g = load(path);
  auto s = tg::find_knotted_cycle(g, cap);
  std::cout << "cycles scanned " << s.cycles_scanned << '\n';
  if (s.witness) {
    std::cout << tg::to_string(s.witness->verdict.status) << ' ';
    print_cycle(g, s.witness->cycle);
    return kNontrivial;
  }
  if (s.status == tg::ScanStatus::CapExceeded) {
    std::cout << "cycle cap exceeded\n";
    return kIndeterminate;
  }
  std::cout << "no knotted cycle\n";
  return kOk;
}

int cmd_links(const std::string& path, std::size_t cap) {
  auto g = load(path);
  if (g.torus() != tg::TorusKind::Standard) throw InputError("link scan needs a standard torus");
  auto s = tg::find_nonsplit_link(g, cap);
  std::cout << "cycles scanned " << s.cycles_scanned << ", disjoint pairs " << s.pairs_checked << '\n';
  if (s.witness) {
    for (const auto& c : s.witness->cycles) {
      std::cout << "component ";
      print_cycle(g, c);
    }
    return kNontrivial;
  }
  if (s.status == tg::ScanStatus::CapExceeded) {
    std::cout << "cycle cap exceeded\n";
    return kIndeterminate;
  }
  std::cout << "no nonsplit link\n";
  return kOk;
}

int cmd_bouquet(const std::string& path, const std::string& tree) {
  auto g = load(path);
  tg::SpanningTree t;
  if (tree.empty()) {
    t = tg::spanning_tree(g);
  } else {
    for (const auto& id : split_commas(tree)) {
      auto e = g.find_edge(id);
      if (!e) throw InputError("unknown edge " + id);
      t.edges.push_back(*e);
    }
    std::sort(t.edges.begin(), t.edges.end());
    t.roots.push_back(0);
    try {
      tg::check_spanning_tree(g, t);
    } catch (const tg::StructuralError& e) {
      throw InputError(e.what());
    }
  }
  auto b = tg::contract_to_bouquet(g, t);
  std::cout << "base " << g.vertex(b.base).id << ", loops " << b.loop_classes.size() << '\n';
  for (auto h : b.loop_classes) {
    std::cout << "  " << class_text(h) << ' ' << tg::to_string(tg::knot_type(h, g.torus()).status) << '\n';
  }
  const bool trivial = tg::is_bouquet_trivial(b, g.torus());
  std::cout << (trivial ? "trivial" : "nontrivial") << '\n';
  return trivial ? kOk : kNontrivial;
}

int cmd_primitive(const std::string& path, std::size_t tree_cap) {
  auto g = load(path);
  auto r = tg::is_primitive(g, tree_cap);
  std::cout << "spanning trees checked " << r.trees_checked << '\n';
  switch (r.value) {
    case tg::Tristate::True: std::cout << "primitive\n"; return kOk;
    case tg::Tristate::Indeterminate: std::cout << "tree cap exceeded\n"; return kIndeterminate;
    case tg::Tristate::False: break;
  }
  std::cout << "not primitive; tree";
  for (auto e : r.counterexample->edges) std::cout << ' ' << g.edge(e).id;
  std::cout << '\n';
  return kNontrivial;
}

int cmd_enumerate(const std::string& source, int grid, std::size_t limit, std::size_t max_segments) {
  auto g = builtin_or_file(source);
  tg::EnumerationOptions opt;
  opt.limit = limit;
  opt.max_total_segments = max_segments;
  std::size_t count = 0;
  auto status = tg::enumerate_grid_embeddings(g, grid, opt, [&](const tg::GridEmbedding& e) {
    ++count;
    std::cout << tg::serialize_graph_file(e.to_torus_graph(), grid) << '\n';
    return true;
  });
  std::cout << "# " << count << " embeddings"
            << (status == tg::EnumerationStatus::Truncated ? " (limit reached)" : "") << '\n';
  return kOk;
}

int cmd_verify(const tg::SweepOptions& opt, const std::string& format) {
  auto r = tg::run_sweep(opt);
  std::cout << (format == "machine" ? tg::render_machine(r) + "\n" : tg::render_text(r));
  return r.consistent() ? kOk : kNontrivial;
}

int cmd_bouquets(int grid, std::size_t loops) {
  auto r = tg::bouquet_family_check(grid, loops);
  std::cout << tg::render_text(r);
  return r.det_violations == 0 && r.family_violations == 0 ? kOk : kNontrivial;
}

int cmd_render(const std::string& path, const std::string& out) {
  auto g = load(path);
  auto svg = tg::render_diagram(g);
  std::ofstream os(out, std::ios::binary);
  if (!os) throw InputError("cannot write " + out);
  os << svg;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triviality of spatial graphs drawn on a torus"};
  app.require_subcommand(1);

  std::string file, format = "text", tree, graph, out;
  std::size_t cap = tg::kDefaultCycleCap, tree_cap = tg::kDefaultTreeCap;
  int grid = 4;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::size_t max_segments = std::numeric_limits<std::size_t>::max();
  tg::SweepOptions sweep;
  std::size_t loops = 3;

  auto* validate = app.add_subcommand("validate", "check the embedding for crossings");
  validate->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "decide triviality");
  classify->add_option("file", file)->required();
  classify->add_option("--cap", cap, "simple-cycle cap");
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  auto* knots = app.add_subcommand("knots", "search for a knotted cycle");
  knots->add_option("file", file)->required();
  knots->add_option("--cap", cap, "simple-cycle cap");

  auto* links = app.add_subcommand("links", "search for a nonsplit link");
  links->add_option("file", file)->required();
  links->add_option("--cap", cap, "simple-cycle cap");

  auto* bouquet = app.add_subcommand("bouquet", "contract a spanning tree");
  bouquet->add_option("file", file)->required();
  bouquet->add_option("--tree", tree, "comma-separated tree edge ids");

  auto* primitive = app.add_subcommand("primitive", "check every spanning-tree contraction");
  primitive->add_option("file", file)->required();
  primitive->add_option("--tree-cap", tree_cap, "spanning-tree cap per component");

  auto* enumerate = app.add_subcommand("enumerate", "list grid embeddings of an abstract graph");
  enumerate->add_option("--graph", graph, "graph file or builtin:K5|builtin:K33|builtin:theta3")->required();
  enumerate->add_option("--grid", grid)->check(CLI::Range(2, 64));
  enumerate->add_option("--limit", limit);
  enumerate->add_option("--max-segments", max_segments, "bound on total path length");

  auto* verify = app.add_subcommand("verify", "consistency sweep over all small grid embeddings");
  verify->add_option("--grid", sweep.grid)->check(CLI::Range(2, 16));
  verify->add_option("--max-edges", sweep.max_edges);
  verify->add_option("--budget", sweep.budget, "reduction-oracle states per instance");
  verify->add_option("--max-segments", sweep.max_segments, "bound on total path length");
  verify->add_option("--threads", sweep.threads);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  auto* bouquets = app.add_subcommand("bouquets", "loop-class family check over grid bouquets");
  bouquets->add_option("--grid", grid)->check(CLI::Range(2, 16));
  bouquets->add_option("--loops", loops);

  auto* render = app.add_subcommand("render", "write an SVG diagram");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*classify) return cmd_classify(file, cap, format);
    if (*knots) return cmd_knots(file, cap);
    if (*links) return cmd_links(file, cap);
    if (*bouquet) return cmd_bouquet(file, tree);
    if (*primitive) return cmd_primitive(file, tree_cap);
    if (*enumerate) return cmd_enumerate(graph, grid, limit, max_segments);
    if (*verify) return cmd_verify(sweep, format);
    if (*bouquets) return cmd_bouquets(grid, loops);
    if (*render) return cmd_render(file, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const tg::StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
