#include "torusgraph/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace torusgraph {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double sx(double x) { return kMargin + x * kSize; }
double sy(double y) { return kMargin + (1.0 - y) * kSize; }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Parameters in (0,1) where the segment a->b meets an integer grid line.
std::vector<Rational> cuts(const Vec2& a, const Vec2& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  auto along = [&](const Rational& p, const Rational& q) {
    if (p == q) return;
    auto lo = std::min(p, q), hi = std::max(p, q);
    for (Integer k = ceil_of(lo); Rational(k) <= hi; ++k) {
      Rational t = (Rational(k) - p) / (q - p);
      if (t > 0 && t < 1) ts.push_back(t);
    }
  };
  along(a.x, b.x);
  along(a.y, b.y);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

std::string render_diagram(const TorusGraph& g) {
  std::ostringstream os;
  const double full = kSize + 2 * kMargin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(full) << "\" height=\"" << num(full)
     << "\" viewBox=\"0 0 " << num(full) << ' ' << num(full) << "\">\n";
  os << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSize) << "\" height=\""
     << num(kSize) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    os << "<g class=\"edge\" id=\"" << escape(e.id) << "\" stroke=\"" << kPalette[i % std::size(kPalette)]
       << "\" stroke-width=\"2\" fill=\"none\">\n";
    for (std::size_t s = 0; s + 1 < e.polyline.size(); ++s) {
      const Vec2& a = e.polyline[s];
      const Vec2& b = e.polyline[s + 1];
      const Vec2 d = b - a;
      auto ts = cuts(a, b);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        Vec2 p{a.x + d.x * ts[k], a.y + d.y * ts[k]};
        Vec2 q{a.x + d.x * ts[k + 1], a.y + d.y * ts[k + 1]};
        Rational mx = (p.x + q.x) / 2, my = (p.y + q.y) / 2;
        Rational ox(floor_of(mx)), oy(floor_of(my));
        os << "<line x1=\"" << num(sx(to_double(p.x - ox))) << "\" y1=\"" << num(sy(to_double(p.y - oy)))
           << "\" x2=\"" << num(sx(to_double(q.x - ox))) << "\" y2=\"" << num(sy(to_double(q.y - oy))) << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  for (const auto& v : g.vertices()) {
    const double x = sx(to_double(v.position.x)), y = sy(to_double(v.position.y));
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6) << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << escape(v.id) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace torusgraph
