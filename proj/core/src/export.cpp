#include "hypfan/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypfan {

namespace {

std::string join(const std::vector<Label>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s;
}

void write_nodes(std::ostringstream& out, std::size_t n, const FlowGraph* flow,
                 const std::vector<std::vector<Label>>& labels) {
  for (std::size_t v = 0; v < n; ++v) {
    out << "  v" << v << " [label=\"" << v << " {" << join(labels[v]) << "}";
    if (flow) out << " ind " << flow->nodes[v].index;
    out << "\"];\n";
  }
}

void write_edges(std::ostringstream& out, const Skeleton& s, const FlowGraph* flow) {
  if (flow) {
    for (const auto& a : flow->arcs)
      out << "  v" << a.tail << " -> v" << a.head << " [label=\"" << join(s.edges[a.edge].labels) << "\"];\n";
    return;
  }
  for (const auto& e : s.edges) out << "  v" << e.a << " -- v" << e.b << " [label=\"" << join(e.labels) << "\"];\n";
}

}  // namespace

std::string export_dot(const SurfaceComplex& c, const FlowGraph* flow, const FaceColoring* coloring) {
  Skeleton s = skeleton(c);
  std::ostringstream out;
  out << (flow ? "digraph" : "graph") << " complex {\n";
  write_nodes(out, c.num_vertices(), flow, s.vertex_labels);
  write_edges(out, s, flow);
  if (coloring) {
    for (std::size_t f = 0; f < c.num_faces(); ++f) {
      bool black = coloring->color[f] == Color::Black;
      out << "  f" << f << " [shape=box, style=filled, fillcolor=" << (black ? "black" : "white")
          << ", fontcolor=" << (black ? "white" : "black") << ", label=\"F" << f << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const CellComplex3& c, const FlowGraph* flow) {
  Skeleton s = skeleton(c);
  std::ostringstream out;
  out << (flow ? "digraph" : "graph") << " complex {\n";
  write_nodes(out, c.count(0), flow, s.vertex_labels);
  write_edges(out, s, flow);
  out << "}\n";
  return out.str();
}

std::string export_svg(const SurfaceComplex& c) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const double size = 400, r = 160, cx = 200, cy = 200;
  const std::size_t n = c.num_vertices();
  auto pos = [&](std::size_t v) {
    double t = 2 * M_PI * static_cast<double>(v) / static_cast<double>(n);
    return std::pair<double, double>{cx + r * std::cos(t), cy + r * std::sin(t)};
  };
  std::ostringstream out;
  char buf[160];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    auto [a, b] = c.edge_vertices(static_cast<EdgeId>(e));
    auto [x1, y1] = pos(a);
    auto [x2, y2] = pos(b);
    std::snprintf(buf, sizeof buf, "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\"/>\n", x1, y1,
                  x2, y2, palette[c.edge_label(static_cast<EdgeId>(e)) % 10]);
    out << buf;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto [x, y] = pos(v);
    std::snprintf(buf, sizeof buf, "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"6\" fill=\"black\"/>\n", x, y);
    out << buf;
    std::snprintf(buf, sizeof buf, "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"11\">%zu</text>\n", x + 8, y - 8, v);
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hypfan
