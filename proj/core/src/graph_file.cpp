#include "torusgraph/graph_file.hpp"

#include <cctype>
#include <sstream>

namespace torusgraph {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size() || s.size() > 30) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  out = Integer(std::string(s));
  return true;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  Integer num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(token, num)) throw std::invalid_argument("bad number '" + std::string(token) + "'");
  } else {
    if (!parse_integer(token.substr(0, slash), num) || !parse_integer(token.substr(slash + 1), den)) {
      throw std::invalid_argument("bad rational '" + std::string(token) + "'");
    }
    if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(token) + "'");
  }
  return Rational(num, den);
}

GraphFile parse_graph_document(std::string_view text) {
  GraphFile file;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& kw = tokens[0];
    auto number = [&](const std::string& tok) {
      try {
        return parse_rational(tok);
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
    };
    try {
      if (kw == "torus") {
        if (have_header) throw ParseError(line_no, "duplicate torus line");
        if (tokens.size() != 2 && tokens.size() != 4) throw ParseError(line_no, "expected: torus standard|knotted [grid <n>]");
        if (tokens[1] == "standard") file.graph.set_torus(TorusKind::Standard);
        else if (tokens[1] == "knotted") file.graph.set_torus(TorusKind::NonstandardKnotted);
        else throw ParseError(line_no, "unknown torus kind '" + tokens[1] + "'");
        if (tokens.size() == 4) {
          Integer n;
          if (tokens[2] != "grid" || !parse_integer(tokens[3], n) || n < 2 || n > 1000) {
            throw ParseError(line_no, "expected grid <n> with n >= 2");
          }
          file.grid = static_cast<int>(n);
        }
        have_header = true;
      } else if (kw == "vertex") {
        if (!have_header) throw ParseError(line_no, "torus line must come first");
        if (tokens.size() != 4) throw ParseError(line_no, "expected: vertex <id> <x> <y>");
        TorusPoint p{number(tokens[2]), number(tokens[3])};
        if (!TorusPoint::in_domain(p.x) || !TorusPoint::in_domain(p.y)) {
          throw ParseError(line_no, "vertex coordinates must lie in [0,1)");
        }
        file.graph.add_vertex(tokens[1], p);
      } else if (kw == "edge") {
        if (!have_header) throw ParseError(line_no, "torus line must come first");
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected ':' before edge points");
        auto head = split_ws(std::string_view(line).substr(0, colon));
        if (head.size() != 4) throw ParseError(line_no, "expected: edge <id> <u> <v> : <points>");
        std::vector<Vec2> poly;
        std::string_view rest = std::string_view(line).substr(colon + 1);
        std::size_t s = 0;
        while (s <= rest.size()) {
          auto semi = rest.find(';', s);
          if (semi == std::string_view::npos) semi = rest.size();
          auto coords = split_ws(rest.substr(s, semi - s));
          if (coords.size() != 2) throw ParseError(line_no, "each edge point needs exactly two coordinates");
          poly.push_back({number(coords[0]), number(coords[1])});
          s = semi + 1;
        }
        if (poly.size() < 2) throw ParseError(line_no, "edge needs at least two points");
        auto u = file.graph.find_vertex(head[2]);
        auto v = file.graph.find_vertex(head[3]);
        if (!u) throw ParseError(line_no, "unknown vertex '" + head[2] + "'");
        if (!v) throw ParseError(line_no, "unknown vertex '" + head[3] + "'");
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
          if (poly[i] == poly[i + 1]) throw ParseError(line_no, "repeated consecutive point");
        }
        if (poly.front() != file.graph.vertex(*u).position.lift()) {
          throw ParseError(line_no, "first point must equal the coordinates of " + head[2]);
        }
        Vec2 off = poly.back() - file.graph.vertex(*v).position.lift();
        if (!is_integer(off.x) || !is_integer(off.y)) {
          throw ParseError(line_no, "last point must be the coordinates of " + head[3] + " plus an integer vector");
        }
        file.graph.add_edge(head[1], *u, *v, std::move(poly));
      } else {
        throw ParseError(line_no, "unknown keyword '" + kw + "'");
      }
    } catch (const StructuralError& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::overflow_error& e) {
      throw ParseError(line_no, "number out of range");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing torus line");
  return file;
}

TorusGraph parse_graph_file(std::string_view text) { return parse_graph_document(text).graph; }

std::vector<GraphFile> parse_graph_stream(std::string_view text) {
  // Split before every line whose first token is `torus`.
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = split_ws(strip_comment(text.substr(pos, end - pos)));
    if (!tokens.empty() && tokens[0] == "torus") starts.push_back(pos);
    pos = end + 1;
  }
  std::vector<GraphFile> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    auto stop = i + 1 < starts.size() ? starts[i + 1] : text.size();
    out.push_back(parse_graph_document(text.substr(starts[i], stop - starts[i])));
  }
  return out;
}

std::string serialize_graph_file(const TorusGraph& g, std::optional<int> grid) {
  std::ostringstream os;
  os << "torus " << (g.torus() == TorusKind::Standard ? "standard" : "knotted");
  if (grid) os << " grid " << *grid;
  os << '\n';
  for (const auto& v : g.vertices()) {
    os << "vertex " << v.id << ' ' << to_string(v.position.x) << ' ' << to_string(v.position.y) << '\n';
  }
  for (const auto& e : g.edges()) {
    os << "edge " << e.id << ' ' << g.vertex(e.u).id << ' ' << g.vertex(e.v).id << " :";
    for (std::size_t i = 0; i < e.polyline.size(); ++i) {
      os << (i == 0 ? " " : " ; ") << to_string(e.polyline[i].x) << ' ' << to_string(e.polyline[i].y);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace torusgraph
