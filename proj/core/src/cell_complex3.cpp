#include "hypfan/cell_complex3.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace hypfan {

namespace {

std::string ids_text(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CellComplex3::CellComplex3(std::array<std::vector<std::vector<CellId>>, 4> boundary, std::vector<Label> hypersurface)
    : boundary_(std::move(boundary)), hypersurface_(std::move(hypersurface)) {}

int CellComplex3::euler_characteristic() const {
  return static_cast<int>(count(0)) - static_cast<int>(count(1)) + static_cast<int>(count(2)) -
         static_cast<int>(count(3));
}

std::vector<CellComplex3::CellId> CellComplex3::vertices_of(int dim, CellId id) const {
  if (dim == 0) return {id};
  std::vector<CellId> out;
  std::vector<CellId> frontier = {id};
  for (int k = dim; k > 0; --k) {
    std::vector<CellId> next;
    for (CellId c : frontier)
      for (CellId b : boundary_[k].at(c)) next.push_back(b);
    sort_unique(next);
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<CellComplex3::CellId> CellComplex3::cofaces(int dim, CellId id) const {
  std::vector<CellId> out;
  if (dim >= 3) return out;
  for (CellId c = 0; c < static_cast<CellId>(count(dim + 1)); ++c) {
    const auto& b = boundary_[dim + 1][c];
    if (std::find(b.begin(), b.end(), id) != b.end()) out.push_back(c);
  }
  return out;
}

std::vector<Label> CellComplex3::labels_at(int dim, CellId id) const {
  std::vector<Label> out;
  if (dim == 2) return {hypersurface_.at(id)};
  if (dim == 3) return {};
  for (CellId f = 0; f < static_cast<CellId>(count(2)); ++f) {
    bool holds = false;
    if (dim == 1) {
      const auto& b = boundary_[2][f];
      holds = std::find(b.begin(), b.end(), id) != b.end();
    } else {
      auto vs = vertices_of(2, f);
      holds = std::binary_search(vs.begin(), vs.end(), id);
    }
    if (holds) out.push_back(hypersurface_.at(f));
  }
  sort_unique(out);
  return out;
}

DomainCorners CellComplex3::domain_corners(CellId domain) const {
  DomainCorners dc;
  const auto& facets = boundary_[3].at(domain);
  std::vector<std::vector<CellId>> facet_vertices;
  for (CellId f : facets) facet_vertices.push_back(vertices_of(2, f));
  for (CellId v : vertices_of(3, domain)) {
    std::array<Label, 3> corner{-1, -1, -1};
    int k = 0;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (std::binary_search(facet_vertices[i].begin(), facet_vertices[i].end(), v)) {
        if (k < 3) corner[k] = hypersurface_.at(facets[i]);
        ++k;
      }
    dc.corners.push_back(corner);
  }
  return dc;
}

std::vector<Label> CellComplex3::all_labels() const {
  std::vector<Label> out = hypersurface_;
  sort_unique(out);
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.kind == "SelfLoopEdge"; });
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.kind == kind; });
}

ValidationReport validate_complex3(const CellComplex3& c) {
  ValidationReport rep;
  auto add = [&](std::string kind, int dim, std::vector<int> cells, std::string detail) {
    rep.findings.push_back({std::move(kind), dim, std::move(cells), std::move(detail)});
  };

  if (c.count(0) == 0) {
    add("EmptyComplex", 0, {}, "no 0-cells");
    return rep;
  }
  bool dangling = false;
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i < static_cast<int>(c.count(k)); ++i)
      for (int b : c.boundary(k, i))
        if (b < 0 || b >= static_cast<int>(c.count(k - 1))) {
          add("DanglingReference", k, {i}, "boundary references missing " + std::to_string(k - 1) + "-cell " +
                                               std::to_string(b));
          dangling = true;
        }
  if (c.hypersurfaces().size() != c.count(2)) {
    add("DanglingReference", 2, {}, "hypersurface labels do not cover every 2-cell");
    dangling = true;
  }
  if (dangling) return rep;

  const int V = static_cast<int>(c.count(0));
  const int E = static_cast<int>(c.count(1));
  const int F2 = static_cast<int>(c.count(2));
  const int F3 = static_cast<int>(c.count(3));

  // 1-cells: two endpoints.
  std::vector<bool> edge_ok(E, true);
  for (int e = 0; e < E; ++e) {
    const auto& b = c.boundary(1, e);
    if (b.size() != 2) {
      add("BadEdgeBoundary", 1, {e}, std::to_string(b.size()) + " endpoints");
      edge_ok[e] = false;
    } else if (b[0] == b[1]) {
      add("SelfLoopEdge", 1, {e}, "both ends at 0-cell " + std::to_string(b[0]));
    }
  }

  // 2-cells: boundary edges form one cycle.
  std::vector<std::vector<int>> face_vertices(F2);
  for (int f = 0; f < F2; ++f) {
    face_vertices[f] = c.vertices_of(2, f);
    std::map<int, int> degree;
    std::map<int, std::vector<int>> adj;
    bool well_formed = true;
    for (int e : c.boundary(2, f)) {
      if (!edge_ok[e]) {
        well_formed = false;
        continue;
      }
      auto b = c.boundary(1, e);
      degree[b[0]]++;
      degree[b[1]]++;
      adj[b[0]].push_back(b[1]);
      adj[b[1]].push_back(b[0]);
    }
    bool cycle = well_formed && !c.boundary(2, f).empty();
    for (auto [v, d] : degree)
      if (d != 2) cycle = false;
    if (cycle) {
      std::set<int> seen{degree.begin()->first};
      std::vector<int> stack{degree.begin()->first};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (seen.insert(w).second) stack.push_back(w);
      }
      cycle = seen.size() == degree.size();
    }
    if (!cycle) add("NonCyclicBoundary", 2, {f}, "boundary edges " + ids_text(c.boundary(2, f)));
  }

  // 1-cells: four incident 2-cells on two hypersurfaces, each twice.
  std::vector<std::vector<int>> edge_faces(E);
  for (int f = 0; f < F2; ++f)
    for (int e : c.boundary(2, f)) edge_faces[e].push_back(f);
  std::vector<std::array<Label, 2>> edge_labels(E, {-1, -1});
  for (int e = 0; e < E; ++e) {
    std::map<Label, int> per_label;
    for (int f : edge_faces[e]) per_label[c.hypersurface(f)]++;
    bool ok = edge_faces[e].size() == 4 && per_label.size() == 2;
    for (auto [l, n] : per_label) ok = ok && n == 2;
    if (ok) {
      edge_labels[e] = {per_label.begin()->first, std::next(per_label.begin())->first};
    } else {
      add("EdgeStarViolation", 1, {e}, std::to_string(edge_faces[e].size()) + " incident 2-cells on " +
                                           std::to_string(per_label.size()) + " hypersurfaces");
    }
  }

  // 2-cells: two distinct sides.
  std::vector<std::vector<int>> face_domains(F2);
  for (int d = 0; d < F3; ++d)
    for (int f : c.boundary(3, d)) face_domains[f].push_back(d);
  for (int f = 0; f < F2; ++f) {
    const auto& ds = face_domains[f];
    if (ds.size() != 2 || ds[0] == ds[1])
      add("TwoCellNotTwoSided", 2, {f}, "bounds 3-cells " + ids_text(ds));
  }

  // 3-cells: simple combinatorics, one facet per hypersurface.
  std::size_t corner_total = 0;
  for (int d = 0; d < F3; ++d) {
    const auto& facets = c.boundary(3, d);
    std::map<Label, int> per_label;
    for (int f : facets) per_label[c.hypersurface(f)]++;
    for (auto [l, n] : per_label)
      if (n > 1) add("RepeatedFacetLabel", 3, {d}, std::to_string(n) + " facets on hypersurface " + std::to_string(l));
    auto vs = c.vertices_of(3, d);
    corner_total += vs.size();
    for (int v : vs) {
      int meets = 0;
      for (int f : facets)
        if (std::binary_search(face_vertices[f].begin(), face_vertices[f].end(), v)) ++meets;
      if (meets != 3)
        add("NonSimpleDomain", 3, {d}, "0-cell " + std::to_string(v) + " meets " + std::to_string(meets) + " facets");
    }
  }

  // 0-cells: corank and octahedral link.
  std::vector<std::vector<int>> vertex_edges(V);
  for (int e = 0; e < E; ++e)
    if (edge_ok[e])
      for (int v : c.boundary(1, e)) vertex_edges[v].push_back(e);
  std::vector<std::vector<int>> vertex_faces(V);
  for (int f = 0; f < F2; ++f)
    for (int v : face_vertices[f]) vertex_faces[v].push_back(f);
  std::vector<int> vertex_domains(V, 0);
  for (int d = 0; d < F3; ++d)
    for (int v : c.vertices_of(3, d)) vertex_domains[v]++;

  for (int v = 0; v < V; ++v) {
    std::set<Label> labels;
    for (int f : vertex_faces[v]) labels.insert(c.hypersurface(f));
    if (labels.size() != 3)
      add("VertexCorankViolation", 0, {v}, "lies on " + std::to_string(labels.size()) + " hypersurfaces");

    const auto& ends = vertex_edges[v];
    bool self_loop = false;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i)
      if (ends[i] == ends[i + 1]) self_loop = true;
    int corners = 0;
    std::map<int, std::vector<int>> link;
    bool link_ok = ends.size() == 6;
    for (int f : vertex_faces[v]) {
      std::vector<int> at_v;
      for (int e : c.boundary(2, f))
        if (edge_ok[e] && (c.boundary(1, e)[0] == v || c.boundary(1, e)[1] == v)) at_v.push_back(e);
      if (at_v.size() != 2) {
        link_ok = false;
        continue;
      }
      ++corners;
      link[at_v[0]].push_back(at_v[1]);
      link[at_v[1]].push_back(at_v[0]);
    }
    link_ok = link_ok && corners == 12 && vertex_domains[v] == 8;
    if (link_ok && !self_loop) {
      for (int e : ends)
        if (link[e].size() != 4) link_ok = false;
      std::set<int> seen{ends[0]};
      std::vector<int> stack{ends[0]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : link[x])
          if (seen.insert(y).second) stack.push_back(y);
      }
      if (seen.size() != 6) link_ok = false;
      std::map<std::array<Label, 2>, int> pairs;
      for (int e : ends) pairs[edge_labels[e]]++;
      bool paired = pairs.size() == 3;
      for (auto& [p, n] : pairs) paired = paired && n == 2;
      if (!paired) add("LinkViolation", 0, {v}, "edge-ends do not pair up by hypersurface pairs");
    }
    if (!link_ok)
      add("LinkViolation", 0, {v}, std::to_string(ends.size()) + " edge-ends, " + std::to_string(corners) +
                                       " face-corners, " + std::to_string(vertex_domains[v]) + " domain-corners");
  }

  if (corner_total != 8u * static_cast<std::size_t>(V))
    add("CornerCountMismatch", 3, {}, std::to_string(corner_total) + " domain corners for " + std::to_string(V) +
                                          " 0-cells");
  return rep;
}

int euler_characteristic(const CellComplex3& c) { return c.euler_characteristic(); }

}  // namespace hypfan
