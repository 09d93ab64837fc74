#include "hypfan/surface_complex.hpp"

#include <algorithm>
#include <queue>

#include "hypfan/error.hpp"

namespace hypfan {

std::string to_string(const Surface& s) {
  if (s.orientable) {
    if (s.genus_or_crosscaps == 0) return "sphere";
    return "orientable genus " + std::to_string(s.genus_or_crosscaps);
  }
  return "non-orientable, " + std::to_string(s.genus_or_crosscaps) + " crosscaps";
}

SurfaceComplex SurfaceComplex::build(SurfaceInput input) {
  if (input.vertices.empty()) throw Error(ErrorCode::EmptyComplex, "a complex needs at least one vertex");

  const int darts = static_cast<int>(input.vertices.size() * 4);
  std::vector<int> seen_rot(darts, 0);
  for (std::size_t v = 0; v < input.vertices.size(); ++v) {
    for (DartId d : input.vertices[v]) {
      if (d < 0 || d >= darts)
        throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " at vertex " +
                                                 std::to_string(v) + " is outside 0.." +
                                                 std::to_string(darts - 1));
      if (++seen_rot[d] > 1)
        throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " listed at two vertex slots");
    }
  }
  if (input.edges.size() * 2 != static_cast<std::size_t>(darts))
    throw Error(ErrorCode::DanglingDart, std::to_string(input.edges.size()) + " edges cannot pair " +
                                             std::to_string(darts) + " darts");
  std::vector<int> seen_edge(darts, 0);
  for (std::size_t e = 0; e < input.edges.size(); ++e) {
    auto [a, b] = input.edges[e];
    if (a == b) throw Error(ErrorCode::SelfPairedDart, "edge " + std::to_string(e) + " pairs dart " +
                                                           std::to_string(a) + " with itself");
    for (DartId d : {a, b}) {
      if (d < 0 || d >= darts)
        throw Error(ErrorCode::DanglingDart, "edge " + std::to_string(e) + " references dart " + std::to_string(d));
      if (++seen_edge[d] > 1)
        throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " belongs to two edges");
    }
  }
  if (!input.twisted.empty() && input.twisted.size() != input.edges.size())
    throw Error(ErrorCode::MalformedInput, "twist flags must cover every edge");

  SurfaceComplex c;
  c.input_ = std::move(input);
  c.derive();
  return c;
}

void SurfaceComplex::derive() {
  const int V = static_cast<int>(input_.vertices.size());
  const int D = 4 * V;
  const int E = static_cast<int>(input_.edges.size());

  dart_vertex_.assign(D, -1);
  dart_slot_.assign(D, -1);
  dart_edge_.assign(D, -1);
  for (int v = 0; v < V; ++v)
    for (int k = 0; k < 4; ++k) {
      dart_vertex_[input_.vertices[v][k]] = v;
      dart_slot_[input_.vertices[v][k]] = k;
    }
  for (int e = 0; e < E; ++e) {
    dart_edge_[input_.edges[e][0]] = e;
    dart_edge_[input_.edges[e][1]] = e;
  }

  // Connectivity over the underlying graph.
  {
    std::vector<char> reached(V, 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (DartId d : input_.vertices[v]) {
        int w = dart_vertex_[partner(d)];
        if (!reached[w]) {
          reached[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    if (count != V)
      throw Error(ErrorCode::Disconnected, std::to_string(V - count) + " vertices unreachable from vertex 0");
  }

  auto next = [&](DartId d) { return input_.vertices[dart_vertex_[d]][(dart_slot_[d] + 1) % 4]; };
  auto prev = [&](DartId d) { return input_.vertices[dart_vertex_[d]][(dart_slot_[d] + 3) % 4]; };
  auto tau1 = [&](int f) {
    DartId d = f / 2;
    return f % 2 == 1 ? 2 * next(d) : 2 * prev(d) + 1;
  };
  auto tau0 = [&](int f) {
    DartId d = f / 2;
    int s = f % 2;
    EdgeId e = dart_edge_[d];
    return 2 * partner(d) + (twisted(e) ? s : 1 - s);
  };

  // Faces: orbits of <tau0, tau1> on flags, walked corner by corner.
  flag_face_.assign(2 * D, -1);
  faces_.clear();
  for (int f0 = 0; f0 < 2 * D; ++f0) {
    if (flag_face_[f0] != -1) continue;
    const FaceId id = static_cast<FaceId>(faces_.size());
    Face face;
    int f = f0;
    do {
      int g = tau1(f);
      flag_face_[f] = id;
      flag_face_[g] = id;
      DartId leave = g / 2;
      face.darts.push_back(leave);
      face.edges.push_back(dart_edge_[leave]);
      face.corners.push_back(dart_vertex_[leave]);
      f = tau0(g);
    } while (f != f0);
    faces_.push_back(std::move(face));
  }
  for (DartId d = 0; d < D; ++d)
    if (flag_face_[2 * d] == flag_face_[2 * d + 1])
      throw Error(ErrorCode::NonDiskFace, "face " + std::to_string(flag_face_[2 * d]) +
                                              " meets both sides of edge " + std::to_string(dart_edge_[d]));

  // Loops by the through-strand rule, ordered by smallest edge id.
  edge_label_.assign(E, -1);
  loops_.clear();
  for (EdgeId e0 = 0; e0 < E; ++e0) {
    if (edge_label_[e0] != -1) continue;
    Loop loop;
    loop.id = static_cast<Label>(loops_.size());
    DartId leave = input_.edges[e0][0];
    do {
      EdgeId e = dart_edge_[leave];
      edge_label_[e] = loop.id;
      loop.darts.push_back(leave);
      loop.edges.push_back(e);
      loop.vertices.push_back(dart_vertex_[leave]);
      leave = opposite(partner(leave));
    } while (leave != input_.edges[e0][0]);
    loops_.push_back(std::move(loop));
  }
  for (auto& face : faces_) {
    face.labels.clear();
    for (EdgeId e : face.edges) face.labels.push_back(edge_label_[e]);
  }

  // Orientability: the flag graph is bipartite under tau0, tau1, tau2.
  bool orientable = true;
  {
    std::vector<int> color(2 * D, -1);
    for (int s0 = 0; s0 < 2 * D && orientable; ++s0) {
      if (color[s0] != -1) continue;
      color[s0] = 0;
      std::queue<int> q;
      q.push(s0);
      while (!q.empty() && orientable) {
        int f = q.front();
        q.pop();
        for (int g : {tau0(f), tau1(f), f ^ 1}) {
          if (color[g] == -1) {
            color[g] = 1 - color[f];
            q.push(g);
          } else if (color[g] == color[f]) {
            orientable = false;
          }
        }
      }
    }
  }
  const int chi = euler_characteristic();
  surface_.orientable = orientable;
  surface_.genus_or_crosscaps = orientable ? (2 - chi) / 2 : 2 - chi;
  if (input_.surface && !(*input_.surface == surface_))
    throw Error(ErrorCode::SurfaceMismatch, "declared " + to_string(*input_.surface) + " but the map is " +
                                                to_string(surface_) + " (chi = " + std::to_string(chi) + ")");
}

DartId SurfaceComplex::partner(DartId d) const {
  const auto& e = input_.edges[dart_edge_.at(d)];
  return e[0] == d ? e[1] : e[0];
}

DartId SurfaceComplex::opposite(DartId d) const {
  return input_.vertices[dart_vertex_.at(d)][(dart_slot_[d] + 2) % 4];
}

bool SurfaceComplex::twisted(EdgeId e) const {
  return !input_.twisted.empty() && input_.twisted.at(e);
}

std::array<VertexId, 2> SurfaceComplex::edge_vertices(EdgeId e) const {
  return {dart_vertex_[input_.edges.at(e)[0]], dart_vertex_[input_.edges.at(e)[1]]};
}

std::array<Label, 2> SurfaceComplex::vertex_labels(VertexId v) const {
  const auto& r = input_.vertices.at(v);
  return {edge_label_[dart_edge_[r[0]]], edge_label_[dart_edge_[r[1]]]};
}

std::array<FaceId, 2> SurfaceComplex::edge_faces(EdgeId e) const {
  DartId a = input_.edges.at(e)[0];
  return {flag_face(a, 0), flag_face(a, 1)};
}

FaceId SurfaceComplex::corner_face(VertexId v, int k) const {
  return flag_face(input_.vertices.at(v)[k % 4], 1);
}

int SurfaceComplex::euler_characteristic() const {
  return static_cast<int>(num_vertices()) - static_cast<int>(num_edges()) + static_cast<int>(num_faces());
}

std::vector<EdgeId> SurfaceComplex::self_loop_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(num_edges()); ++e) {
    auto [a, b] = edge_vertices(e);
    if (a == b) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> SurfaceComplex::self_crossings() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(num_vertices()); ++v) {
    auto l = vertex_labels(v);
    if (l[0] == l[1]) out.push_back(v);
  }
  return out;
}

SurfaceComplex build_surface_complex(SurfaceInput input) { return SurfaceComplex::build(std::move(input)); }

std::vector<Loop> trace_loops(const SurfaceComplex& c) { return c.loops(); }

int euler_characteristic(const SurfaceComplex& c) { return c.euler_characteristic(); }

}  // namespace hypfan
