#include "steiner/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace steiner {

namespace {

struct Frame {
  double min_x = 0.0, min_y = 0.0, width = 1.0, height = 1.0, mark = 0.01;
};

std::string num(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.8g", v);
  return buffer;
}

Frame fit(const std::vector<Point>& points) {
  double min_x = points.front().real(), max_x = min_x;
  double min_y = -points.front().imag(), max_y = min_y;
  for (Point p : points) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, -p.imag());
    max_y = std::max(max_y, -p.imag());
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double margin = 0.05 * span;
  Frame frame;
  frame.min_x = min_x - margin;
  frame.min_y = min_y - margin;
  frame.width = (max_x - min_x) + 2.0 * margin;
  frame.height = (max_y - min_y) + 2.0 * margin;
  frame.mark = 0.012 * span;
  return frame;
}

void open_svg(std::ostringstream& out, const Frame& frame) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(frame.min_x)
      << " " << num(frame.min_y) << " " << num(frame.width) << " " << num(frame.height) << "\">\n";
}

void line(std::ostringstream& out, Point a, Point b, const Frame& frame, const char* color) {
  out << "  <line x1=\"" << num(a.real()) << "\" y1=\"" << num(-a.imag()) << "\" x2=\""
      << num(b.real()) << "\" y2=\"" << num(-b.imag()) << "\" stroke=\"" << color
      << "\" stroke-width=\"" << num(frame.mark * 0.25) << "\"/>\n";
}

void dot(std::ostringstream& out, Point p, const Frame& frame, bool filled) {
  out << "  <circle cx=\"" << num(p.real()) << "\" cy=\"" << num(-p.imag()) << "\" r=\""
      << num(frame.mark) << "\" fill=\"" << (filled ? "black" : "white")
      << "\" stroke=\"black\" stroke-width=\"" << num(frame.mark * 0.25) << "\"/>\n";
}

}  // namespace

std::string render_tree_svg(const EmbeddedTree& tree) {
  Frame frame = fit(tree.position);
  std::ostringstream out;
  open_svg(out, frame);
  for (auto [u, v] : tree.topology.edges()) {
    line(out, tree.position[u], tree.position[v], frame, "#1f3b99");
  }
  for (int i = 0; i < tree.topology.node_count(); ++i) {
    dot(out, tree.position[i], frame, tree.topology.is_terminal(i));
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_path_svg(const PolyPath& path) {
  Frame frame = fit(path.vertices);
  std::ostringstream out;
  open_svg(out, frame);
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    line(out, path.vertices[i], path.vertices[i + 1], frame, "#993b1f");
  }
  // Chord between the endpoints: the certified lower bound.
  line(out, path.vertices.front(), path.vertices.back(), frame, "#999999");
  for (size_t i = 0; i < path.vertices.size(); ++i) {
    dot(out, path.vertices[i], frame, i == 0 || i + 1 == path.vertices.size());
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace steiner
