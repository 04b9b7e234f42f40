#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace levelnum::cli {

namespace {

constexpr double kCenter = 260.0;
constexpr double kRadius = 200.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::string fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  // Avoid "-0.00".
  return std::string(buffer) == "-0.00" ? "0.00" : buffer;
}

const char* level_color(int level) { return kPalette[static_cast<std::size_t>(level - 1) % kPalette.size()]; }

struct StyledEdge {
  Edge edge;
  int level = 0;  // 0 for spine edges
  bool chord = false;
};

class Layout {
 public:
  Layout(const Graph& g, const LevelCertificate& cert)
      : cert_(cert), frags_(fragments(g, cert.spine)), position_(static_cast<std::size_t>(g.vertex_count())) {
    const auto count = static_cast<double>(cert.spine.size());
    for (std::size_t i = 0; i < cert.spine.size(); ++i) {
      position_[static_cast<std::size_t>(cert.spine.at(static_cast<int>(i)))] = on_circle(static_cast<double>(i) / count, 1.0);
    }
    for (const Fragment& f : frags_) {
      place_internal(f);
    }
    for (std::size_t i = 0; i < cert.spine.size(); ++i) {
      const Vertex a = cert.spine.at(static_cast<int>(i));
      const Vertex b = cert.spine.at(static_cast<int>((i + 1) % cert.spine.size()));
      edges_.push_back({Edge(a, b), 0, false});
    }
    for (std::size_t i = 0; i < frags_.size(); ++i) {
      const int level = i < cert.levels.size() ? cert.levels[i] : 1;
      for (const Edge& e : frags_[i].attachment_edges) {
        edges_.push_back({e, level, frags_[i].is_chord()});
      }
      for (const Edge& e : frags_[i].internal_edges) {
        edges_.push_back({e, level, false});
      }
    }
  }

  const LevelCertificate& cert() const { return cert_; }
  const std::vector<Fragment>& frags() const { return frags_; }
  const std::vector<StyledEdge>& edges() const { return edges_; }
  Point at(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  bool on_spine(Vertex v) const { return cert_.spine.contains(v); }

  // Control point of a chord: the midpoint pulled halfway to the center.
  Point bend(const Edge& e) const {
    const Point a = at(e.u);
    const Point b = at(e.v);
    return {kCenter + ((a.x + b.x) / 2 - kCenter) * 0.5, kCenter + ((a.y + b.y) / 2 - kCenter) * 0.5};
  }

 private:
  static Point on_circle(double turn, double scale) {
    const double angle = 2 * std::numbers::pi * turn - std::numbers::pi / 2;
    return {kCenter + kRadius * scale * std::cos(angle), kCenter + kRadius * scale * std::sin(angle)};
  }

  void place_internal(const Fragment& f) {
    if (f.is_chord()) {
      return;
    }
    double sx = 0;
    double sy = 0;
    for (int p : f.attachments) {
      const Point q = at(cert_.spine.at(p));
      sx += q.x - kCenter;
      sy += q.y - kCenter;
    }
    const auto n = static_cast<double>(f.attachments.size());
    const Point anchor{kCenter + 0.45 * sx / n, kCenter + 0.45 * sy / n};
    const auto k = static_cast<double>(f.internal_vertices.size());
    for (std::size_t i = 0; i < f.internal_vertices.size(); ++i) {
      const double angle = 2 * std::numbers::pi * static_cast<double>(i) / k;
      const double spread = k > 1 ? 28.0 : 0.0;
      position_[static_cast<std::size_t>(f.internal_vertices[i])] = {anchor.x + spread * std::cos(angle),
                                                                     anchor.y + spread * std::sin(angle)};
    }
  }

  const LevelCertificate& cert_;
  std::vector<Fragment> frags_;
  std::vector<Point> position_;
  std::vector<StyledEdge> edges_;
};

std::vector<Vertex> drawn_vertices(const Layout& layout) {
  std::vector<Vertex> out(layout.cert().spine.vertices().begin(), layout.cert().spine.vertices().end());
  for (const Fragment& f : layout.frags()) {
    out.insert(out.end(), f.internal_vertices.begin(), f.internal_vertices.end());
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace

std::string render_svg(const Graph& g, const LevelCertificate& cert) {
  const Layout layout(g, cert);
  std::ostringstream out;
  const std::string size = fixed(2 * kCenter);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <circle cx=\"" << fixed(kCenter) << "\" cy=\"" << fixed(kCenter) << "\" r=\"" << fixed(kRadius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2.00\"/>\n";
  for (const StyledEdge& s : layout.edges()) {
    if (s.level == 0) {
      continue;  // the circle already draws the spine
    }
    const Point a = layout.at(s.edge.u);
    const Point b = layout.at(s.edge.v);
    out << "  <path d=\"M " << fixed(a.x) << ' ' << fixed(a.y);
    if (s.chord) {
      const Point c = layout.bend(s.edge);
      out << " Q " << fixed(c.x) << ' ' << fixed(c.y);
    } else {
      out << " L";
    }
    out << ' ' << fixed(b.x) << ' ' << fixed(b.y) << "\" fill=\"none\" stroke=\"" << level_color(s.level)
        << "\" stroke-width=\"2.00\" data-level=\"" << s.level << "\"/>\n";
  }
  for (Vertex v : drawn_vertices(layout)) {
    const Point p = layout.at(v);
    out << "  <circle cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y) << "\" r=\"9.00\" fill=\""
        << (layout.on_spine(v) ? "white" : "#eeeeee") << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fixed(p.x) << "\" y=\"" << fixed(p.y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "  <text x=\"10.00\" y=\"20.00\" font-family=\"sans-serif\" font-size=\"13\">levels: " << cert.k
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const Graph& g, const LevelCertificate& cert) {
  const Layout layout(g, cert);
  std::ostringstream out;
  out << "graph levels {\n";
  out << "  graph [k=" << cert.k << "];\n";
  out << "  node [shape=circle, fixedsize=true, width=0.35];\n";
  for (Vertex v : drawn_vertices(layout)) {
    const Point p = layout.at(v);
    out << "  " << v << " [pos=\"" << fixed(p.x) << ',' << fixed(2 * kCenter - p.y) << "!\""
        << (layout.on_spine(v) ? "" : ", style=filled, fillcolor=\"#eeeeee\"") << "];\n";
  }
  for (const StyledEdge& s : layout.edges()) {
    out << "  " << s.edge.u << " -- " << s.edge.v;
    if (s.level == 0) {
      out << " [penwidth=2];\n";
    } else {
      out << " [color=\"" << level_color(s.level) << "\", label=\"L" << s.level << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace levelnum::cli
