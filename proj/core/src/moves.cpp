#include "hypfan/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hypfan/error.hpp"
#include "hypfan/fansearch.hpp"
#include "hypfan/generators.hpp"

namespace hypfan {

namespace {

// Slots at the new vertices of a sphere insertion.
constexpr int kOut = 0, kNext = 1, kIn = 2, kPrev = 3;

bool direction_taken(const Fan& fan, const Vec& v) {
  for (const auto& [l, u] : fan.vectors())
    if (same_direction(u, v)) return true;
  return false;
}

// w' and w for a corner spanned by `corner` (ordered by label).
std::pair<Vec, Vec> sphere_vectors(const Fan& fan, const std::vector<Vec>& corner, const std::optional<Vec>& given) {
  Vec wp;
  if (given) {
    if (given->size() != corner.size())
      throw Error(ErrorCode::DimensionMismatch, "w' has " + std::to_string(given->size()) + " coordinates");
    if (!cone_contains(corner, *given, true))
      throw Error(ErrorCode::VectorOutsideCorner, "w' = " + to_string(*given) + " is not inside the corner cone");
    if (direction_taken(fan, *given))
      throw Error(ErrorCode::VectorOutsideCorner, "w' = " + to_string(*given) + " repeats an existing direction");
    wp = *given;
  } else {
    Vec sum = corner[0];
    for (std::size_t i = 1; i < corner.size(); ++i) sum = add(sum, corner[i]);
    wp = sum;
    for (long k = 1; direction_taken(fan, wp); ++k) wp = add(sum, scale(corner[0], Rational(1, k)));
  }
  Vec w = negate(wp);
  for (long k = 1; direction_taken(fan, w); ++k) w = negate(add(wp, scale(corner.back(), Rational(1, k))));
  return {wp, w};
}

}  // namespace

SurfaceComplex insert_spheres_combinatorial(const SurfaceComplex& c, VertexId x) {
  if (x < 0 || x >= static_cast<VertexId>(c.num_vertices()))
    throw Error(ErrorCode::NotAVertex, "vertex " + std::to_string(x) + " does not exist");
  SurfaceInput in = c.input();
  const int V = static_cast<int>(c.num_vertices());
  const int D = 4 * V;
  const auto rot = c.rotation(x);
  auto a = [&](int k, int slot) { return D + 4 * ((k + 4) % 4) + slot; };
  auto b = [&](int k, int slot) { return D + 16 + 4 * ((k + 4) % 4) + slot; };

  for (int k = 0; k < 4; ++k) in.vertices.push_back({a(k, 0), a(k, 1), a(k, 2), a(k, 3)});
  for (int k = 0; k < 4; ++k) in.vertices.push_back({b(k, 0), b(k, 1), b(k, 2), b(k, 3)});
  for (int k = 0; k < 4; ++k) {
    auto& e = in.edges[c.dart_edge(rot[k])];
    (e[0] == rot[k] ? e[0] : e[1]) = b(k, kOut);
  }
  const std::size_t old_edges = in.edges.size();
  for (int k = 0; k < 4; ++k) in.edges.push_back({rot[k], a(k, kIn)});
  for (int k = 0; k < 4; ++k) in.edges.push_back({a(k, kOut), b(k, kIn)});
  for (int k = 0; k < 4; ++k) in.edges.push_back({a(k, kNext), a(k + 1, kPrev)});
  for (int k = 0; k < 4; ++k) in.edges.push_back({b(k, kNext), b(k + 1, kPrev)});
  if (!in.twisted.empty()) in.twisted.resize(old_edges + 16, false);
  return SurfaceComplex::build(std::move(in));
}

namespace {

struct PairStructure {
  VertexId x = -1;
  std::array<DartId, 4> x_darts{};
  std::set<VertexId> removed_vertices;
  std::set<EdgeId> removed_edges;
  // surviving outer edge -> (dart to drop, dart of x replacing it, twist)
  std::map<EdgeId, std::vector<std::pair<DartId, DartId>>> rewires;
  std::map<EdgeId, bool> twist;
};

PairStructure analyse_pair(const SurfaceComplex& c, Label inner, Label outer) {
  const Label N = static_cast<Label>(c.num_loops());
  if (inner < 0 || outer < 0 || inner >= N || outer >= N || inner == outer)
    throw Error(ErrorCode::NotASpherePair, "labels " + std::to_string(inner) + ", " + std::to_string(outer) +
                                               " are not two distinct loops");
  const Loop& S = c.loops()[inner];
  const Loop& T = c.loops()[outer];
  auto distinct = [](const std::vector<VertexId>& vs) { return std::set<VertexId>(vs.begin(), vs.end()); };
  auto sv = distinct(S.vertices), tv = distinct(T.vertices);
  if (sv.size() != 4 || tv.size() != 4 || S.edges.size() != 4 || T.edges.size() != 4)
    throw Error(ErrorCode::NotASpherePair, "both loops must pass through exactly four vertices");

  PairStructure ps;
  auto other = [&](DartId d) { return c.dart_vertex(c.partner(d)); };
  // At a vertex on loop l, the two darts of the crossing strand.
  auto cross_darts = [&](VertexId v, Label l) {
    const auto& r = c.rotation(v);
    int s = c.edge_label(c.dart_edge(r[0])) == l ? 1 : 0;
    return std::array<DartId, 2>{r[s], r[s + 2]};
  };
  std::map<VertexId, int> x_votes;
  for (VertexId a : sv) {
    auto ls = c.vertex_labels(a);
    if (ls[0] == ls[1]) throw Error(ErrorCode::NotASpherePair, "inner loop crosses itself");
    for (DartId d : cross_darts(a, inner)) x_votes[other(d)]++;
  }
  for (auto [v, n] : x_votes)
    if (n == 4) ps.x = v;
  if (ps.x < 0 || sv.count(ps.x) || tv.count(ps.x))
    throw Error(ErrorCode::NotASpherePair, "inner loop does not surround a single vertex");

  const auto& rx = c.rotation(ps.x);
  std::set<VertexId> used_b;
  for (int k = 0; k < 4; ++k) {
    DartId dk = rx[k];
    ps.x_darts[k] = dk;
    DartId a_in = c.partner(dk);
    VertexId a = c.dart_vertex(a_in);
    if (!sv.count(a)) throw Error(ErrorCode::NotASpherePair, "a dart of the centre does not reach the inner loop");
    DartId a_out = c.opposite(a_in);
    DartId b_in = c.partner(a_out);
    VertexId b = c.dart_vertex(b_in);
    if (!tv.count(b) || !used_b.insert(b).second)
      throw Error(ErrorCode::NotASpherePair, "inner and outer loops are not joined spoke by spoke");
    DartId b_out = c.opposite(b_in);
    EdgeId keep = c.dart_edge(b_out);
    if (c.edge_label(keep) == inner || c.edge_label(keep) == outer)
      throw Error(ErrorCode::NotASpherePair, "a spoke does not leave the outer loop");
    ps.removed_edges.insert(c.dart_edge(dk));
    ps.removed_edges.insert(c.dart_edge(a_out));
    ps.rewires[keep].push_back({b_out, dk});
    bool t = c.twisted(c.dart_edge(dk)) != c.twisted(c.dart_edge(a_out));
    ps.twist[keep] = (ps.twist.count(keep) ? ps.twist[keep] : c.twisted(keep)) != t;
  }
  for (EdgeId e : S.edges) ps.removed_edges.insert(e);
  for (EdgeId e : T.edges) ps.removed_edges.insert(e);
  ps.removed_vertices.insert(sv.begin(), sv.end());
  ps.removed_vertices.insert(tv.begin(), tv.end());
  for (const auto& [e, rw] : ps.rewires)
    if (ps.removed_edges.count(e)) throw Error(ErrorCode::NotASpherePair, "spokes and loops share an edge");

  // Domains outside the outer loop lose one side per outer arc.
  std::set<EdgeId> outer_edges(T.edges.begin(), T.edges.end());
  std::set<EdgeId> inner_edges(S.edges.begin(), S.edges.end());
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    const auto& face = c.faces()[f];
    int on_outer = 0;
    bool on_inner = false;
    for (EdgeId e : face.edges) {
      if (outer_edges.count(e)) ++on_outer;
      if (inner_edges.count(e)) on_inner = true;
    }
    if (on_outer > 0 && !on_inner && static_cast<int>(face.size()) - on_outer < 3)
      throw Error(ErrorCode::WouldCreateDegenerateDomain, "face " + std::to_string(f) + " would keep only " +
                                                              std::to_string(face.size() - on_outer) + " corners");
  }
  return ps;
}

}  // namespace

SurfaceComplex remove_spheres_combinatorial(const SurfaceComplex& c, Label inner, Label outer) {
  PairStructure ps = analyse_pair(c, inner, outer);
  const SurfaceInput& in = c.input();
  std::vector<int> new_dart(c.num_darts(), -1);
  int nd = 0;
  for (DartId d = 0; d < static_cast<DartId>(c.num_darts()); ++d)
    if (!ps.removed_vertices.count(c.dart_vertex(d))) new_dart[d] = nd++;

  SurfaceInput out;
  out.surface = in.surface;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    if (ps.removed_vertices.count(v)) continue;
    const auto& r = in.vertices[v];
    out.vertices.push_back({new_dart[r[0]], new_dart[r[1]], new_dart[r[2]], new_dart[r[3]]});
  }
  std::vector<bool> twists;
  bool any_twist = false;
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.num_edges()); ++e) {
    if (ps.removed_edges.count(e)) continue;
    auto ends = in.edges[e];
    bool t = c.twisted(e);
    if (auto it = ps.rewires.find(e); it != ps.rewires.end()) {
      for (auto [drop, with] : it->second) (ends[0] == drop ? ends[0] : ends[1]) = with;
      t = ps.twist[e];
    }
    out.edges.push_back({new_dart[ends[0]], new_dart[ends[1]]});
    twists.push_back(t);
    any_twist = any_twist || t;
  }
  if (any_twist || !in.twisted.empty()) out.twisted = std::move(twists);
  return SurfaceComplex::build(std::move(out));
}

Insertion2 insert_spheres(const SurfaceComplex& c, const Fan& fan, VertexId x, const std::optional<Vec>& w_prime) {
  if (x < 0 || x >= static_cast<VertexId>(c.num_vertices()))
    throw Error(ErrorCode::NotAVertex, "vertex " + std::to_string(x) + " does not exist");
  if (!fan_compatible(c, fan).ok) throw Error(ErrorCode::IncompatibleInput, "fan is not compatible with the complex");
  auto ls = c.vertex_labels(x);
  if (ls[0] == ls[1]) throw Error(ErrorCode::IncompatibleInput, "vertex " + std::to_string(x) + " is a self-crossing");
  Label lo = std::min(ls[0], ls[1]), hi = std::max(ls[0], ls[1]);
  auto [wp, w] = sphere_vectors(fan, {fan.at(lo), fan.at(hi)}, w_prime);

  Insertion2 out{insert_spheres_combinatorial(c, x), fan, {}};
  const Label N = static_cast<Label>(c.num_loops());
  out.pair = {N, N + 1, x, w, wp};
  out.fan.set(N, w);
  out.fan.set(N + 1, wp);
  auto rep = fan_compatible(out.complex, out.fan);
  if (!rep.ok) throw Error(ErrorCode::IncompatibleInput, "extended fan is not compatible after insertion");
  return out;
}

std::pair<SurfaceComplex, Fan> remove_spheres(const SurfaceComplex& c, const Fan& fan, const SpherePair& pair) {
  SurfaceComplex out = remove_spheres_combinatorial(c, pair.inner, pair.outer);
  // Surviving edges keep their relative order, so old and new edges match up
  // in sequence once the removed ones are skipped.
  PairStructure ps = analyse_pair(c, pair.inner, pair.outer);
  std::map<Label, Label> relabel;
  EdgeId ne = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.num_edges()); ++e) {
    if (ps.removed_edges.count(e)) continue;
    relabel[c.edge_label(e)] = out.edge_label(ne++);
  }
  Fan f(fan.dimension());
  for (auto [old_l, new_l] : relabel) f.set(new_l, fan.at(old_l));
  return {std::move(out), std::move(f)};
}

Insertion3 insert_spheres(const CellComplex3& c, const Fan& fan, int x, const std::optional<Vec>& w_prime) {
  if (x < 0 || x >= static_cast<int>(c.count(0)))
    throw Error(ErrorCode::NotAVertex, "0-cell " + std::to_string(x) + " does not exist");
  if (!validate_complex3(c).ok()) throw Error(ErrorCode::IncompatibleInput, "complex fails validation");
  if (!fan_compatible(c, fan).ok) throw Error(ErrorCode::IncompatibleInput, "fan is not compatible with the complex");

  const int V = static_cast<int>(c.count(0)), E = static_cast<int>(c.count(1));
  const int F = static_cast<int>(c.count(2)), G = static_cast<int>(c.count(3));
  std::vector<int> ex = c.cofaces(0, x);
  if (ex.size() != 6) throw Error(ErrorCode::IncompatibleInput, "0-cell does not have six edge-ends");
  std::map<int, int> edge_slot;
  for (int i = 0; i < 6; ++i) edge_slot[ex[i]] = i;

  std::vector<int> fx;
  std::vector<std::array<int, 2>> f_edges;
  for (int f = 0; f < F; ++f) {
    std::vector<int> at;
    for (int e : c.boundary(2, f))
      if (edge_slot.count(e)) at.push_back(edge_slot[e]);
    if (at.empty()) continue;
    if (at.size() != 2) throw Error(ErrorCode::IncompatibleInput, "2-cell " + std::to_string(f) + " has a cusp at x");
    fx.push_back(f);
    f_edges.push_back({std::min(at[0], at[1]), std::max(at[0], at[1])});
  }
  std::map<int, int> face_slot;
  for (std::size_t j = 0; j < fx.size(); ++j) face_slot[fx[j]] = static_cast<int>(j);
  std::vector<int> dx;
  std::vector<std::array<int, 3>> d_faces;
  for (int d = 0; d < G; ++d) {
    std::vector<int> at;
    for (int f : c.boundary(3, d))
      if (face_slot.count(f)) at.push_back(face_slot[f]);
    if (at.empty()) continue;
    if (at.size() != 3) throw Error(ErrorCode::IncompatibleInput, "3-cell " + std::to_string(d) + " is not simple at x");
    std::sort(at.begin(), at.end());
    dx.push_back(d);
    d_faces.push_back({at[0], at[1], at[2]});
  }
  if (fx.size() != 12 || dx.size() != 8) throw Error(ErrorCode::IncompatibleInput, "link of x is not octahedral");

  std::vector<Label> lx = c.labels_at(0, x);
  std::vector<Vec> corner;
  for (Label l : lx) corner.push_back(fan.at(l));
  auto [wp, w] = sphere_vectors(fan, corner, w_prime);
  const std::vector<Label> all = c.all_labels();
  const Label inner = all.empty() ? 0 : all.back() + 1, outer = inner + 1;

  auto cells = c.cells();
  std::vector<Label> labels = c.hypersurfaces();
  auto a = [&](int i) { return V + i; };
  auto b = [&](int i) { return V + 6 + i; };
  auto I = [&](int i) { return E + i; };
  auto M = [&](int i) { return E + 6 + i; };
  auto s = [&](int j) { return E + 12 + j; };
  auto t = [&](int j) { return E + 24 + j; };
  auto In = [&](int j) { return F + j; };
  auto Mi = [&](int j) { return F + 12 + j; };
  auto sig = [&](int k) { return F + 24 + k; };
  auto tau = [&](int k) { return F + 32 + k; };

  for (int i = 0; i < 12; ++i) cells[0].push_back({});
  for (int i = 0; i < 6; ++i) {
    auto& bd = cells[1][ex[i]];
    (bd[0] == x ? bd[0] : bd[1]) = b(i);
  }
  for (int i = 0; i < 6; ++i) cells[1].push_back({x, a(i)});
  for (int i = 0; i < 6; ++i) cells[1].push_back({a(i), b(i)});
  for (int j = 0; j < 12; ++j) cells[1].push_back({a(f_edges[j][0]), a(f_edges[j][1])});
  for (int j = 0; j < 12; ++j) cells[1].push_back({b(f_edges[j][0]), b(f_edges[j][1])});

  for (int j = 0; j < 12; ++j) cells[2][fx[j]].push_back(t(j));
  for (int j = 0; j < 12; ++j) {
    cells[2].push_back({I(f_edges[j][0]), s(j), I(f_edges[j][1])});
    labels.push_back(c.hypersurface(fx[j]));
  }
  for (int j = 0; j < 12; ++j) {
    cells[2].push_back({M(f_edges[j][0]), t(j), M(f_edges[j][1]), s(j)});
    labels.push_back(c.hypersurface(fx[j]));
  }
  for (int k = 0; k < 8; ++k) {
    cells[2].push_back({s(d_faces[k][0]), s(d_faces[k][1]), s(d_faces[k][2])});
    labels.push_back(inner);
  }
  for (int k = 0; k < 8; ++k) {
    cells[2].push_back({t(d_faces[k][0]), t(d_faces[k][1]), t(d_faces[k][2])});
    labels.push_back(outer);
  }

  for (int k = 0; k < 8; ++k) cells[3][dx[k]].push_back(tau(k));
  for (int k = 0; k < 8; ++k) cells[3].push_back({In(d_faces[k][0]), In(d_faces[k][1]), In(d_faces[k][2]), sig(k)});
  for (int k = 0; k < 8; ++k)
    cells[3].push_back({Mi(d_faces[k][0]), Mi(d_faces[k][1]), Mi(d_faces[k][2]), sig(k), tau(k)});

  Insertion3 out{CellComplex3(std::move(cells), std::move(labels)), fan, {inner, outer, x, w, wp}};
  out.fan.set(inner, w);
  out.fan.set(outer, wp);
  if (!validate_complex3(out.complex).ok() || !fan_compatible(out.complex, out.fan).ok)
    throw Error(ErrorCode::IncompatibleInput, "insertion did not produce a compatible complex");
  return out;
}

std::pair<CellComplex3, Fan> remove_spheres(const CellComplex3& c, const Fan& fan, const SpherePair& pair) {
  const int V = static_cast<int>(c.count(0)), E = static_cast<int>(c.count(1));
  const int F = static_cast<int>(c.count(2)), G = static_cast<int>(c.count(3));
  std::vector<int> sfaces, tfaces;
  for (int f = 0; f < F; ++f) {
    if (c.hypersurface(f) == pair.inner) sfaces.push_back(f);
    if (c.hypersurface(f) == pair.outer) tfaces.push_back(f);
  }
  if (pair.inner == pair.outer || sfaces.size() != 8 || tfaces.size() != 8)
    throw Error(ErrorCode::NotASpherePair, "each sphere must consist of eight 2-cells");

  std::set<int> s_edges, t_edges, avs, bvs;
  for (int f : sfaces)
    for (int e : c.boundary(2, f)) s_edges.insert(e);
  for (int f : tfaces)
    for (int e : c.boundary(2, f)) t_edges.insert(e);
  for (int e : s_edges)
    for (int v : c.boundary(1, e)) avs.insert(v);
  for (int e : t_edges)
    for (int v : c.boundary(1, e)) bvs.insert(v);
  if (s_edges.size() != 12 || t_edges.size() != 12 || avs.size() != 6 || bvs.size() != 6)
    throw Error(ErrorCode::NotASpherePair, "spheres are not octahedral");

  // Spokes: edges from the inner sphere to the centre and to the outer sphere.
  std::set<int> spokes_in, spokes_mid;
  std::map<int, int> b_to_keep;  // outer-sphere vertex -> surviving edge
  int x = -1;
  for (int e = 0; e < E; ++e) {
    if (s_edges.count(e) || t_edges.count(e)) continue;
    auto bd = c.boundary(1, e);
    bool ia = avs.count(bd[0]) || avs.count(bd[1]);
    bool ib = bvs.count(bd[0]) || bvs.count(bd[1]);
    if (ia && ib) {
      spokes_mid.insert(e);
    } else if (ia) {
      int other = avs.count(bd[0]) ? bd[1] : bd[0];
      if (x >= 0 && x != other) throw Error(ErrorCode::NotASpherePair, "inner sphere has no single centre");
      x = other;
      spokes_in.insert(e);
    } else if (ib) {
      int bv = bvs.count(bd[0]) ? bd[0] : bd[1];
      if (b_to_keep.count(bv)) throw Error(ErrorCode::NotASpherePair, "outer vertex with two outward edges");
      b_to_keep[bv] = e;
    }
  }
  if (x < 0 || spokes_in.size() != 6 || spokes_mid.size() != 6 || b_to_keep.size() != 6)
    throw Error(ErrorCode::NotASpherePair, "spheres are not joined spoke by spoke around one centre");

  std::set<int> drop_faces(sfaces.begin(), sfaces.end());
  drop_faces.insert(tfaces.begin(), tfaces.end());
  for (int f = 0; f < F; ++f) {
    if (drop_faces.count(f)) continue;
    for (int e : c.boundary(2, f))
      if (spokes_in.count(e) || spokes_mid.count(e)) {
        drop_faces.insert(f);
        break;
      }
  }
  std::set<int> drop_domains;
  std::set<int> sset(sfaces.begin(), sfaces.end()), tset(tfaces.begin(), tfaces.end());
  for (int d = 0; d < G; ++d) {
    const auto& bd = c.boundary(3, d);
    bool has_s = std::any_of(bd.begin(), bd.end(), [&](int f) { return sset.count(f) > 0; });
    bool has_t = std::any_of(bd.begin(), bd.end(), [&](int f) { return tset.count(f) > 0; });
    if (has_s) {
      drop_domains.insert(d);
    } else if (has_t && static_cast<int>(bd.size()) - 1 < static_cast<int>(c.labels_at(0, x).size()) + 1) {
      throw Error(ErrorCode::WouldCreateDegenerateDomain, "3-cell " + std::to_string(d) + " would be bounded only by "
                                                          "the hypersurfaces through the centre");
    }
  }

  std::array<std::vector<int>, 4> renum;
  auto compact = [&](int dim, int n, auto dropped) {
    renum[dim].assign(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (!dropped(i)) renum[dim][i] = k++;
  };
  compact(0, V, [&](int v) { return avs.count(v) || bvs.count(v); });
  compact(1, E, [&](int e) { return s_edges.count(e) || t_edges.count(e) || spokes_in.count(e) || spokes_mid.count(e); });
  compact(2, F, [&](int f) { return drop_faces.count(f) > 0; });
  compact(3, G, [&](int d) { return drop_domains.count(d) > 0; });

  std::array<std::vector<std::vector<int>>, 4> cells;
  std::vector<Label> labels;
  cells[0].assign(V - 12, {});
  for (int e = 0; e < E; ++e) {
    if (renum[1][e] < 0) continue;
    std::vector<int> bd;
    for (int v : c.boundary(1, e)) bd.push_back(bvs.count(v) ? renum[0][x] : renum[0][v]);
    cells[1].push_back(std::move(bd));
  }
  for (int f = 0; f < F; ++f) {
    if (renum[2][f] < 0) continue;
    std::vector<int> bd;
    for (int e : c.boundary(2, f))
      if (renum[1][e] >= 0) bd.push_back(renum[1][e]);
    cells[2].push_back(std::move(bd));
    labels.push_back(c.hypersurface(f));
  }
  for (int d = 0; d < G; ++d) {
    if (renum[3][d] < 0) continue;
    std::vector<int> bd;
    for (int f : c.boundary(3, d))
      if (renum[2][f] >= 0) bd.push_back(renum[2][f]);
    cells[3].push_back(std::move(bd));
  }
  Fan f = fan;
  f.erase(pair.inner);
  f.erase(pair.outer);
  return {CellComplex3(std::move(cells), std::move(labels)), std::move(f)};
}

std::pair<SurfaceComplex, Fan> augment(const SurfaceComplex& c, const Fan& fan, int k) {
  std::pair<SurfaceComplex, Fan> cur{c, fan};
  for (int i = 0; i < k; ++i) {
    auto ins = insert_spheres(cur.first, cur.second, 0);
    cur = {std::move(ins.complex), std::move(ins.fan)};
  }
  return cur;
}

std::pair<CellComplex3, Fan> augment(const CellComplex3& c, const Fan& fan, int k) {
  std::pair<CellComplex3, Fan> cur{c, fan};
  for (int i = 0; i < k; ++i) {
    auto ins = insert_spheres(cur.first, cur.second, 0);
    cur = {std::move(ins.complex), std::move(ins.fan)};
  }
  return cur;
}

std::pair<SurfaceComplex, Fan> random_insertions(const SurfaceComplex& c, const Fan& fan, int count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::pair<SurfaceComplex, Fan> cur{c, fan};
  for (int i = 0; i < count; ++i) {
    VertexId x = static_cast<VertexId>(rng() % cur.first.num_vertices());
    auto ins = insert_spheres(cur.first, cur.second, x);
    cur = {std::move(ins.complex), std::move(ins.fan)};
  }
  return cur;
}

namespace {

std::string arg(const MoveOp& op, const std::string& key, const std::string& fallback = {}) {
  auto it = op.args.find(key);
  if (it != op.args.end()) return it->second;
  if (!fallback.empty()) return fallback;
  throw Error(ErrorCode::MalformedInput, "move '" + op.op + "' needs argument '" + key + "'");
}

int int_arg(const MoveOp& op, const std::string& key, const std::string& fallback = {}) {
  std::string s = arg(op, key, fallback);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "argument '" + key + "' of move '" + op.op + "' is not an integer: " + s);
  }
}

State generate_state(const MoveOp& op) {
  std::string kind = arg(op, "kind");
  if (kind == "octahedral") {
    auto g = generate_octahedral();
    return State{std::move(g.complex), std::move(g.fan), std::nullopt, std::nullopt, {}};
  }
  if (kind == "genus") {
    auto g = generate_genus_g(int_arg(op, "g"), int_arg(op, "variant", "8"));
    return State{std::move(g.complex), std::move(g.fan), std::move(g.involution), std::nullopt, {}};
  }
  if (kind == "s3" || kind == "rp3") {
    auto g = kind == "s3" ? generate_s3() : generate_rp3();
    return State{std::move(g.complex), std::move(g.fan), std::nullopt, std::move(g.involution), {}};
  }
  throw Error(ErrorCode::MalformedInput, "unknown generator '" + kind + "'");
}

}  // namespace

State apply_move(State state, const MoveOp& op) {
  if (op.op == "generate") return generate_state(op);
  if (op.op == "insert_spheres") {
    std::optional<Vec> wp;
    if (op.args.count("w_prime")) wp = parse_vector(op.args.at("w_prime"));
    int x = int_arg(op, "x", "0");
    if (auto* s = std::get_if<SurfaceComplex>(&state.complex)) {
      auto ins = insert_spheres(*s, state.fan, x, wp);
      state.complex = std::move(ins.complex);
      state.fan = std::move(ins.fan);
      state.pairs.push_back(ins.pair);
    } else {
      auto ins = insert_spheres(std::get<CellComplex3>(state.complex), state.fan, x, wp);
      state.complex = std::move(ins.complex);
      state.fan = std::move(ins.fan);
      state.pairs.push_back(ins.pair);
    }
    state.involution2.reset();
    state.involution3.reset();
    return state;
  }
  if (op.op == "remove_spheres") {
    SpherePair pair;
    if (op.args.count("inner") || op.args.count("outer")) {
      pair.inner = int_arg(op, "inner");
      pair.outer = int_arg(op, "outer");
    } else if (!state.pairs.empty()) {
      pair = state.pairs.back();
    } else {
      throw Error(ErrorCode::MalformedInput, "remove_spheres needs 'inner' and 'outer'");
    }
    if (auto* s = std::get_if<SurfaceComplex>(&state.complex)) {
      auto [c, f] = remove_spheres(*s, state.fan, pair);
      state.complex = std::move(c);
      state.fan = std::move(f);
    } else {
      auto [c, f] = remove_spheres(std::get<CellComplex3>(state.complex), state.fan, pair);
      state.complex = std::move(c);
      state.fan = std::move(f);
    }
    if (!state.pairs.empty() && state.pairs.back().inner == pair.inner && state.pairs.back().outer == pair.outer)
      state.pairs.pop_back();
    return state;
  }
  if (op.op == "augment") {
    int k = int_arg(op, "k");
    for (int i = 0; i < k; ++i) state = apply_move(std::move(state), MoveOp{"insert_spheres", {{"x", "0"}}});
    return state;
  }
  if (op.op == "random_insertions") {
    int count = int_arg(op, "count");
    std::mt19937_64 rng(static_cast<std::uint64_t>(std::stoull(arg(op, "seed", "0"))));
    for (int i = 0; i < count; ++i) {
      std::size_t V = std::visit([](const auto& c) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SurfaceComplex>)
          return c.num_vertices();
        else
          return c.count(0);
      }, state.complex);
      int x = static_cast<int>(rng() % V);
      state = apply_move(std::move(state), MoveOp{"insert_spheres", {{"x", std::to_string(x)}}});
    }
    return state;
  }
  if (op.op == "quotient") {
    if (auto* s = std::get_if<SurfaceComplex>(&state.complex)) {
      if (!state.involution2) throw Error(ErrorCode::MalformedInput, "no involution to quotient by");
      SurfaceComplex q = quotient_by_involution(*s, *state.involution2);
      auto found = search_fan(q);
      if (found.status != SearchStatus::Found)
        throw Error(ErrorCode::FanSearchFailed, "quotient: " + to_string(found.status));
      state.complex = std::move(q);
      state.fan = std::move(*found.fan);
    } else {
      if (!state.involution3) throw Error(ErrorCode::MalformedInput, "no involution to quotient by");
      state.complex = quotient_by_involution(std::get<CellComplex3>(state.complex), *state.involution3);
    }
    state.involution2.reset();
    state.involution3.reset();
    state.pairs.clear();
    return state;
  }
  throw Error(ErrorCode::MalformedInput, "unknown move '" + op.op + "'");
}

State replay(const MoveScript& script, std::optional<State> initial) {
  if (script.empty() && !initial) throw Error(ErrorCode::MalformedInput, "empty script without an initial complex");
  std::size_t start = 0;
  std::optional<State> state = std::move(initial);
  if (!state) {
    if (script[0].op != "generate")
      throw Error(ErrorCode::MalformedInput, "a script without input must start with 'generate'");
    state = generate_state(script[0]);
    start = 1;
  }
  for (std::size_t i = start; i < script.size(); ++i) state = apply_move(std::move(*state), script[i]);
  return std::move(*state);
}

}  // namespace hypfan
