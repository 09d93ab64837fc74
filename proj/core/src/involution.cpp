#include "hypfan/involution.hpp"

#include <algorithm>

#include "hypfan/error.hpp"

namespace hypfan {

namespace {

void check_permutation(const std::vector<int>& m, std::size_t n, const std::string& what) {
  if (m.size() != n)
    throw Error(ErrorCode::NotIncidencePreserving, what + " map has " + std::to_string(m.size()) + " entries, expected " +
                                                       std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] < 0 || m[i] >= static_cast<int>(n))
      throw Error(ErrorCode::NotIncidencePreserving, what + " " + std::to_string(i) + " maps out of range");
    if (m[m[i]] != static_cast<int>(i))
      throw Error(ErrorCode::NotInvolutive, what + " " + std::to_string(i) + " is not sent back by the second application");
    if (m[i] == static_cast<int>(i)) throw Error(ErrorCode::NotFree, what + " " + std::to_string(i) + " is fixed");
  }
}

}  // namespace

SurfaceComplex quotient_by_involution(const SurfaceComplex& c, const DartInvolution& s) {
  const auto& sig = s.map;
  check_permutation(sig, c.num_darts(), "dart");

  const int V = static_cast<int>(c.num_vertices());
  const int E = static_cast<int>(c.num_edges());
  std::vector<int> vmap(V), reversing(V, 0);
  for (int v = 0; v < V; ++v) {
    const auto& rot = c.rotation(v);
    int w = c.dart_vertex(sig[rot[0]]);
    std::array<int, 4> slots{};
    for (int k = 0; k < 4; ++k) {
      if (c.dart_vertex(sig[rot[k]]) != w)
        throw Error(ErrorCode::NotIncidencePreserving, "darts of vertex " + std::to_string(v) + " split across vertices");
      slots[k] = c.dart_slot(sig[rot[k]]);
    }
    bool fwd = true, bwd = true;
    for (int k = 0; k < 4; ++k) {
      if (slots[(k + 1) % 4] != (slots[k] + 1) % 4) fwd = false;
      if (slots[(k + 1) % 4] != (slots[k] + 3) % 4) bwd = false;
    }
    if (!fwd && !bwd)
      throw Error(ErrorCode::NotIncidencePreserving, "rotation at vertex " + std::to_string(v) + " is scrambled");
    if (w == v) throw Error(ErrorCode::NotFree, "vertex " + std::to_string(v) + " is fixed");
    vmap[v] = w;
    reversing[v] = bwd ? 1 : 0;
  }

  std::vector<int> emap(E);
  for (int e = 0; e < E; ++e) {
    auto [a, b] = c.edge_darts(e);
    int f = c.dart_edge(sig[a]);
    if (c.dart_edge(sig[b]) != f)
      throw Error(ErrorCode::NotIncidencePreserving, "edge " + std::to_string(e) + " is not sent to an edge");
    if (f == e) throw Error(ErrorCode::NotFree, "edge " + std::to_string(e) + " is fixed");
    bool expected = c.twisted(e) != (reversing[c.dart_vertex(a)] != reversing[c.dart_vertex(b)]);
    if (c.twisted(f) != expected)
      throw Error(ErrorCode::NotIncidencePreserving, "edge " + std::to_string(e) + " changes its twist under the map");
    emap[e] = f;
  }

  std::vector<int> new_vertex(V, -1);
  int nv = 0;
  for (int v = 0; v < V; ++v)
    if (v < vmap[v]) new_vertex[v] = nv++;

  // Class of a dart: its own slot at a representative vertex, otherwise the
  // slot of its image.
  auto dart_class = [&](DartId d) -> std::pair<DartId, bool> {
    int v = c.dart_vertex(d);
    if (new_vertex[v] >= 0) return {4 * new_vertex[v] + c.dart_slot(d), false};
    DartId t = sig[d];
    return {4 * new_vertex[vmap[v]] + c.dart_slot(t), reversing[v] != 0};
  };

  SurfaceInput q;
  for (int v = 0; v < V; ++v)
    if (new_vertex[v] >= 0) {
      int n = new_vertex[v];
      q.vertices.push_back({4 * n, 4 * n + 1, 4 * n + 2, 4 * n + 3});
    }
  bool any_twist = false;
  std::vector<bool> twists;
  for (int e = 0; e < E; ++e) {
    if (!(e < emap[e])) continue;
    auto [a, b] = c.edge_darts(e);
    auto [ca, fa] = dart_class(a);
    auto [cb, fb] = dart_class(b);
    q.edges.push_back({ca, cb});
    bool t = c.twisted(e) != (fa != fb);
    twists.push_back(t);
    any_twist = any_twist || t;
  }
  if (any_twist) q.twisted = std::move(twists);

  SurfaceComplex out = SurfaceComplex::build(std::move(q));
  if (2 * out.num_faces() != c.num_faces())
    throw Error(ErrorCode::NotFree, "some face is carried onto itself (" + std::to_string(c.num_faces()) + " faces, " +
                                        std::to_string(out.num_faces()) + " in the quotient)");
  return out;
}

CellComplex3 quotient_by_involution(const CellComplex3& c, const CellInvolution& s) {
  for (int k = 0; k < 4; ++k) check_permutation(s.map[k], c.count(k), std::to_string(k) + "-cell");
  for (int k = 1; k < 4; ++k)
    for (int i = 0; i < static_cast<int>(c.count(k)); ++i) {
      std::vector<int> image;
      for (int b : c.boundary(k, i)) image.push_back(s.map[k - 1][b]);
      std::vector<int> target = c.boundary(k, s.map[k][i]);
      std::sort(image.begin(), image.end());
      std::sort(target.begin(), target.end());
      if (image != target)
        throw Error(ErrorCode::NotIncidencePreserving, std::to_string(k) + "-cell " + std::to_string(i) +
                                                           " boundary is not carried to its image's boundary");
    }
  for (int f = 0; f < static_cast<int>(c.count(2)); ++f)
    if (c.hypersurface(f) != c.hypersurface(s.map[2][f]))
      throw Error(ErrorCode::NotIncidencePreserving, "2-cell " + std::to_string(f) + " changes hypersurface");

  std::array<std::vector<int>, 4> cls;
  for (int k = 0; k < 4; ++k) {
    cls[k].assign(c.count(k), -1);
    int n = 0;
    for (int i = 0; i < static_cast<int>(c.count(k)); ++i)
      if (i < s.map[k][i]) cls[k][i] = n++;
    for (int i = 0; i < static_cast<int>(c.count(k)); ++i)
      if (cls[k][i] < 0) cls[k][i] = cls[k][s.map[k][i]];
  }
  std::array<std::vector<std::vector<int>>, 4> boundary;
  std::vector<Label> labels;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < static_cast<int>(c.count(k)); ++i) {
      if (!(i < s.map[k][i])) continue;
      std::vector<int> b;
      if (k > 0)
        for (int x : c.boundary(k, i)) b.push_back(cls[k - 1][x]);
      boundary[k].push_back(std::move(b));
      if (k == 2) labels.push_back(c.hypersurface(i));
    }
  return CellComplex3(std::move(boundary), std::move(labels));
}

}  // namespace hypfan
