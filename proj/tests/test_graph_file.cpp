#include <gtest/gtest.h>

#include "json.hpp"
#include "support.hpp"
#include "torusgraph/graph_file.hpp"
#include "torusgraph/report.hpp"
#include "torusgraph/svg.hpp"

using namespace torusgraph;
using namespace testing_support;

namespace {

const char* kTheta =
    "# theta\n"
    "torus standard\n"
    "vertex a 1/4 1/2\n"
    "vertex b 3/4 1/2\n"
    "edge e1 a b : 1/4 1/2 ; 3/4 1/2\n"
    "edge e2 a b : 1/4 1/2 ; 1/2 3/4 ; 3/4 1/2\n"
    "edge e3 a b : 1/4 1/2 ; 1/2 1/4 ; 3/4 1/2\n";

int error_line(std::string_view text) {
  try {
    parse_graph_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(GraphFile, ParsesTheta) {
  auto g = parse_graph_file(kTheta);
  EXPECT_EQ(g.torus(), TorusKind::Standard);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(1).polyline.size(), 3u);
  EXPECT_EQ(g, theta_in_disc());
}

TEST(GraphFile, ReportsTheOffendingLine) {
  EXPECT_EQ(error_line("torus standard\nvertex a 1 0\n"), 2);
  EXPECT_EQ(error_line("torus standard\nvertex a 0 0\nvertex a 1/2 0\n"), 3);
  EXPECT_EQ(error_line("torus standard\nvertex a 0 0\nedge e a a : 0 0 ; 1/3 1/3\n"), 3);
  EXPECT_EQ(error_line("torus standard\nvertex a 0 0\nedge e a b : 0 0 ; 1 0\n"), 3);
  EXPECT_EQ(error_line("torus flat\n"), 1);
  EXPECT_EQ(error_line("vertex a 0 0\n"), 1);
  EXPECT_EQ(error_line("torus standard\nvertex a 0 0\nbogus\n"), 3);
  EXPECT_EQ(error_line("torus standard\nvertex a 1/0 0\n"), 2);
  EXPECT_EQ(error_line("torus standard\nvertex a 0 0\nedge e a a : 0 0 ; 1/2 0 ; 1/2 0 ; 1 0\n"), 3);
}

TEST(GraphFile, InvalidEmbeddingIsStillParsed) {
  auto g = parse_graph_file(
      "torus standard\nvertex a 0 0\nedge l1 a a : 0 0 ; 1 1\nedge l2 a a : 0 0 ; 1 -1\n");
  EXPECT_FALSE(validate_embedding(g).ok);
}

TEST(GraphFile, RoundTrip) {
  for (const char* name : {"theta-disc.tg", "trefoil-c3.tg", "hopf-joined.tg", "knotted-theta.tg", "k5-grid.tg"}) {
    auto doc = parse_graph_document(serialize_graph_file(fixture(name)));
    EXPECT_EQ(doc.graph, fixture(name)) << name;
    EXPECT_FALSE(doc.grid);
  }
  auto doc = parse_graph_document(serialize_graph_file(theta_in_disc(), 4));
  EXPECT_EQ(doc.grid, 4);
  EXPECT_EQ(serialize_graph_file(parse_graph_file(serialize_graph_file(theta_in_disc()))),
            serialize_graph_file(theta_in_disc()));
}

TEST(GraphFile, StreamSplitsAtTorusLines) {
  std::string text = std::string(kTheta) + "\n" + serialize_graph_file(straight_loop(2, 3), 5);
  auto docs = parse_graph_stream(text);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].graph, theta_in_disc());
  EXPECT_EQ(docs[1].grid, 5);
  EXPECT_EQ(docs[1].graph.edge_count(), 1u);
  EXPECT_TRUE(parse_graph_stream("# nothing\n").empty());
}

TEST(GraphFile, Rationals) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(Integer(-1), Integer(2)));
  EXPECT_EQ(parse_rational("7"), Rational(Integer(7)));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(Report, TextAndMachineAgree) {
  for (const char* name : {"trefoil-c3.tg", "hopf-joined.tg", "k33-grid.tg", "theta-disc.tg"}) {
    auto g = fixture(name);
    auto r = make_report(g, classify(g));
    auto j = nlohmann::json::parse(render_machine(r));
    auto text = render_text(r);
    EXPECT_EQ(render_machine(r).find('\n'), std::string::npos);
    EXPECT_EQ(j["verdict"], r.verdict) << name;
    EXPECT_NE(text.find("verdict: " + r.verdict), std::string::npos) << name;
    for (const auto& reason : r.reasons) EXPECT_NE(text.find(reason), std::string::npos) << name;
    EXPECT_EQ(j["link"].size(), r.link.size());
    EXPECT_EQ(j["knot"].is_null(), !r.knot);
  }
}

TEST(Report, KnotCycleIsListedByEdgeIds) {
  auto g = fixture("trefoil-c3.tg");
  auto r = make_report(g, classify(g));
  ASSERT_TRUE(r.knot);
  EXPECT_EQ(r.knot->edges.size(), 3u);
  EXPECT_EQ(r.knot->cls, (HomologyClass{2, 3}));
  EXPECT_EQ(r.knot_type, "NontrivialTorusKnot");
  auto hopf = make_report(fixture("hopf-joined.tg"), classify(fixture("hopf-joined.tg")));
  ASSERT_EQ(hopf.link.size(), 2u);
}

TEST(Svg, Deterministic) {
  auto g = fixture("trefoil-c3.tg");
  EXPECT_EQ(render_diagram(g), render_diagram(g));
  EXPECT_EQ(render_diagram(g).rfind("<svg", 0), 0u);
}

TEST(Svg, TrivialLoopIsOnePiecePerSegment) {
  TorusGraph g;
  g.add_vertex("a", at("1/4", "1/4"));
  g.add_edge("l", "a", "a", {pt("1/4", "1/4"), pt("3/4", "1/4"), pt("1/2", "3/4"), pt("1/4", "1/4")});
  EXPECT_EQ(count(render_diagram(g), "<line"), 3u);
}

TEST(Svg, LongitudeIsCutAtTheBoundary) {
  TorusGraph g;
  g.add_vertex("a", at("1/2", "1/2"));
  g.add_edge("l", "a", "a", {pt("1/2", "1/2"), pt("3/2", "1/2")});
  auto svg = render_diagram(g);
  EXPECT_EQ(count(svg, "<line"), 2u);
  // Pieces run to both sides of the square: x = 20 and x = 420.
  EXPECT_NE(svg.find("20.000"), std::string::npos);
  EXPECT_NE(svg.find("x2=\"420.000\""), std::string::npos);
}
