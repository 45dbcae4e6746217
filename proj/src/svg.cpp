#include "twodist/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace twodist {

std::string render_svg(const Graph& g, const Representation& rep) {
  if (static_cast<int>(rep.points.size()) != g.num_vertices)
    throw Error("render_svg: representation size mismatch");
  const double scale = 60.0;  // pixels per unit distance
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  if (!rep.points.empty()) {
    min_x = max_x = rep.points[0].x();
    min_y = max_y = rep.points[0].y();
    for (const auto& p : rep.points) {
      min_x = std::min(min_x, p.x());
      max_x = std::max(max_x, p.x());
      min_y = std::min(min_y, p.y());
      max_y = std::max(max_y, p.y());
    }
  }
  const double pad = 0.6;
  auto X = [&](double x) { return (x - min_x + pad) * scale; };
  auto Y = [&](double y) { return (max_y - y + pad) * scale; };  // flip y
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << (max_x - min_x + 2 * pad) * scale << "\" height=\"" << (max_y - min_y + 2 * pad) * scale
      << "\">\n";
  auto line = [&](int u, int v, const char* colour, const char* dash) {
    out << "<line x1=\"" << X(rep.points[u].x()) << "\" y1=\"" << Y(rep.points[u].y())
        << "\" x2=\"" << X(rep.points[v].x()) << "\" y2=\"" << Y(rep.points[v].y())
        << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\"" << dash << "/>\n";
  };
  for (auto [u, v] : g.red_edges) line(u, v, "#cc2222", "");
  for (auto [u, v] : g.blue_edges) line(u, v, "#2244cc", "");
  for (const auto& ge : g.green_edges) {
    line(ge.tail, ge.head, "#119911", " stroke-dasharray=\"4 2\"");
    double mx = (rep.points[ge.tail].x() + rep.points[ge.head].x()) / 2;
    double my = (rep.points[ge.tail].y() + rep.points[ge.head].y()) / 2;
    out << "<text x=\"" << X(mx) << "\" y=\"" << Y(my)
        << "\" font-size=\"9\" fill=\"#119911\">" << ge.cls << "</text>\n";
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "<circle cx=\"" << X(rep.points[v].x()) << "\" cy=\"" << Y(rep.points[v].y())
        << "\" r=\"2.5\" fill=\"black\"/>\n";
    auto it = g.labels.find(v);
    if (it != g.labels.end())
      out << "<text x=\"" << X(rep.points[v].x()) + 4 << "\" y=\"" << Y(rep.points[v].y()) - 4
          << "\" font-size=\"10\">" << it->second << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void save_svg(const Graph& g, const Representation& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << render_svg(g, rep);
}

}  // namespace twodist
