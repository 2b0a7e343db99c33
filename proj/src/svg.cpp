#include "bendix/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bendix {

namespace {

const char* kPalette[12] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
                            "#f032e6", "#9a6324", "#800000", "#469990", "#808000", "#000075"};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

std::string emit_svg(const PathSupport& s, const Drawing& d) {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  auto note = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (auto [x, y] : d.coords) note(x, y);
  for (const auto& bends : d.edge_bends)
    for (auto [x, y] : bends) note(x, y);
  if (s.vertex_count() == 0) {
    min_x = min_y = 0;
    max_x = max_y = 1;
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double pad = span * 0.08;
  double stroke = span / 160.0;
  double offset_step = stroke * 1.6;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x - pad) << " "
      << num(-(max_y + pad)) << " " << num(max_x - min_x + 2 * pad) << " "
      << num(max_y - min_y + 2 * pad) << "\">\n";

  // polyline per edge per path, offset sideways by the path's slot on the
  // edge (y is flipped so the drawing is upright)
  for (int p = 0; p < s.path_count(); ++p) {
    const char* color = kPalette[p % 12];
    out << "  <g stroke=\"" << color << "\" fill=\"none\" stroke-width=\"" << num(stroke)
        << "\" stroke-linecap=\"round\">\n";
    const auto& verts = s.path(p).verts;
    const auto& es = s.path_edges(p);
    for (size_t i = 0; i < es.size(); ++i) {
      int e = es[i];
      const auto& on_edge = s.paths_on_edge(e);
      int slot = static_cast<int>(std::find(on_edge.begin(), on_edge.end(), p) - on_edge.begin());
      double off = (slot - (static_cast<int>(on_edge.size()) - 1) / 2.0) * offset_step;
      std::vector<std::pair<double, double>> pts{d.coords[s.edge(e).first]};
      if (e < static_cast<int>(d.edge_bends.size()))
        for (auto q : d.edge_bends[e]) pts.push_back(q);
      pts.push_back(d.coords[s.edge(e).second]);
      if (s.edge(e).first != verts[i]) std::reverse(pts.begin(), pts.end());
      out << "    <polyline points=\"";
      for (size_t t = 0; t + 1 < pts.size(); ++t) {
        double dx = pts[t + 1].first - pts[t].first;
        double dy = pts[t + 1].second - pts[t].second;
        double len = std::max(std::hypot(dx, dy), 1e-12);
        double nx = -dy / len * off, ny = dx / len * off;
        out << num(pts[t].first + nx) << "," << num(-(pts[t].second + ny)) << " ";
        out << num(pts[t + 1].first + nx) << "," << num(-(pts[t + 1].second + ny));
        if (t + 2 < pts.size()) out << " ";
      }
      out << "\"/>\n";
    }
    out << "  </g>\n";
  }

  for (int v = 0; v < s.vertex_count(); ++v) {
    auto [x, y] = d.coords[v];
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(-y) << "\" r=\"" << num(stroke * 1.5)
        << "\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"" << num(stroke * 0.5)
        << "\"/>\n";
    out << "  <text x=\"" << num(x + 2 * stroke) << "\" y=\"" << num(-y - 2 * stroke)
        << "\" font-size=\"" << num(4 * stroke) << "\" font-family=\"sans-serif\">"
        << s.vertex_name(v) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bendix
