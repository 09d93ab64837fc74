#include "hypfan/sphere2.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "hypfan/error.hpp"

namespace hypfan {

namespace {

void require_sphere(const SurfaceComplex& c) {
  if (c.euler_characteristic() != 2 || !c.surface().orientable)
    throw Error(ErrorCode::NotOnSphere, "complex is on the " + to_string(c.surface()) + ", not the sphere");
}

bool on_loop(const SurfaceComplex& c, VertexId v, Label l) {
  auto ls = c.vertex_labels(v);
  return ls[0] == l || ls[1] == l;
}

std::vector<int> component_of_faces(const SurfaceComplex& c, const std::vector<std::vector<FaceId>>& comps) {
  std::vector<int> of(c.num_faces(), -1);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (FaceId f : comps[k]) of[f] = static_cast<int>(k);
  return of;
}

// Vertices whose four corners all lie in component k and that avoid the loops.
std::vector<VertexId> interior_vertices(const SurfaceComplex& c, const std::vector<int>& comp_of, int k,
                                        const std::vector<Label>& loops) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    bool on_any = false;
    for (Label l : loops) on_any = on_any || on_loop(c, v, l);
    if (on_any) continue;
    if (comp_of[c.corner_face(v, 0)] == k) out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

int FaceColoring::count(Color c) const { return static_cast<int>(std::count(color.begin(), color.end(), c)); }

FaceColoring bicolor(const SurfaceComplex& c) {
  require_sphere(c);
  const int F = static_cast<int>(c.num_faces());
  std::vector<std::vector<FaceId>> adj(F);
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.num_edges()); ++e) {
    auto [a, b] = c.edge_faces(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(F, -1);
  for (int root = 0; root < F; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int g : adj[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          q.push(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorCode::NotBipartite, "faces " + std::to_string(f) + " and " + std::to_string(g) +
                                                   " are adjacent and forced to the same colour");
        }
      }
    }
  }
  FaceColoring fc;
  for (int x : color) fc.color.push_back(x == 0 ? Color::Black : Color::White);
  return fc;
}

std::vector<std::vector<FaceId>> complement_components(const SurfaceComplex& c, const std::vector<Label>& loops) {
  const int F = static_cast<int>(c.num_faces());
  std::vector<std::vector<FaceId>> adj(F);
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.num_edges()); ++e) {
    if (std::find(loops.begin(), loops.end(), c.edge_label(e)) != loops.end()) continue;
    auto [a, b] = c.edge_faces(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(F, 0);
  std::vector<std::vector<FaceId>> comps;
  for (int root = 0; root < F; ++root) {
    if (seen[root]) continue;
    std::vector<FaceId> comp;
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      comp.push_back(f);
      for (int g : adj[f])
        if (!seen[g]) {
          seen[g] = 1;
          stack.push_back(g);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

RegionBalance balance_of(const std::vector<FaceId>& faces, const FaceColoring& col) {
  RegionBalance r;
  r.faces = faces;
  for (FaceId f : faces) (col.color.at(f) == Color::Black ? r.black : r.white)++;
  return r;
}

}  // namespace

BalanceReport color_balance(const SurfaceComplex& c, const FaceColoring& coloring) {
  BalanceReport rep;
  std::vector<FaceId> all(c.num_faces());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = static_cast<FaceId>(f);
  rep.regions.push_back(balance_of(all, coloring));
  const auto& r = rep.regions.back();
  check(rep.verdicts, "black = white on the whole sphere", r.black == r.white,
        std::to_string(r.black) + " vs " + std::to_string(r.white));
  return rep;
}

BalanceReport color_balance(const SurfaceComplex& c, const FaceColoring& coloring, Label loop) {
  BalanceReport rep;
  for (const auto& comp : complement_components(c, {loop})) {
    rep.regions.push_back(balance_of(comp, coloring));
    const auto& r = rep.regions.back();
    check(rep.verdicts, "black = white on side of loop " + std::to_string(loop) + " holding face " +
                            std::to_string(comp.front()),
          r.black == r.white, std::to_string(r.black) + " vs " + std::to_string(r.white));
  }
  return rep;
}

std::vector<EyeRecord> eyes(const SurfaceComplex& c, Label i, Label j) {
  require_sphere(c);
  bool meet = false;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    auto l = c.vertex_labels(v);
    if ((l[0] == i && l[1] == j) || (l[0] == j && l[1] == i)) meet = true;
  }
  if (!meet || i == j)
    throw Error(ErrorCode::DisjointLoops, "loops " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
  std::vector<EyeRecord> out;
  for (const auto& comp : complement_components(c, {i, j})) {
    EyeRecord e;
    e.i = i;
    e.j = j;
    e.faces = comp;
    std::set<VertexId> closure;
    for (FaceId f : comp)
      for (VertexId v : c.faces()[f].corners) closure.insert(v);
    for (VertexId v : closure) {
      bool oi = on_loop(c, v, i), oj = on_loop(c, v, j);
      if (oi && oj)
        e.corners.push_back(v);
      else if (oi)
        e.lashes_i.push_back(v);
      else if (oj)
        e.lashes_j.push_back(v);
    }
    out.push_back(std::move(e));
  }
  return out;
}

EyeCheckReport eye_checks(const SurfaceComplex& c, const EyeRecord& eye, const FaceColoring& coloring) {
  EyeCheckReport rep;
  auto b = balance_of(eye.faces, coloring);
  const std::string tag = "eye " + std::to_string(eye.i) + "/" + std::to_string(eye.j) + " at face " +
                          std::to_string(eye.faces.empty() ? -1 : eye.faces.front());
  check(rep.verdicts, tag + ": black = white", b.black == b.white,
        std::to_string(b.black) + " vs " + std::to_string(b.white));

  std::vector<Color> corner_colors;
  bool single = eye.corners.size() == 2;
  for (VertexId p : eye.corners) {
    std::vector<FaceId> inside;
    for (int k = 0; k < 4; ++k) {
      FaceId f = c.corner_face(p, k);
      if (std::binary_search(eye.faces.begin(), eye.faces.end(), f)) inside.push_back(f);
    }
    if (inside.size() != 1) single = false;
    if (!inside.empty()) corner_colors.push_back(coloring.color.at(inside.front()));
  }
  check(rep.verdicts, tag + ": corner domains have different colours",
        single && corner_colors.size() == 2 && corner_colors[0] != corner_colors[1]);
  check(rep.verdicts, tag + ": odd eyelash count on loop " + std::to_string(eye.i), eye.lashes_i.size() % 2 == 1,
        std::to_string(eye.lashes_i.size()));
  check(rep.verdicts, tag + ": odd eyelash count on loop " + std::to_string(eye.j), eye.lashes_j.size() % 2 == 1,
        std::to_string(eye.lashes_j.size()));
  return rep;
}

VertexParityReport vertex_parities(const SurfaceComplex& c, Label loop) {
  require_sphere(c);
  VertexParityReport rep;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v)
    if (on_loop(c, v, loop)) ++rep.on_loop;
  check(rep.verdicts, "vertices on loop " + std::to_string(loop) + " = 0 mod 4", rep.on_loop % 4 == 0,
        std::to_string(rep.on_loop));

  auto comps = complement_components(c, {loop});
  auto comp_of = component_of_faces(c, comps);
  check(rep.verdicts, "loop " + std::to_string(loop) + " has two sides", comps.size() == 2,
        std::to_string(comps.size()) + " components");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    int inner = static_cast<int>(interior_vertices(c, comp_of, static_cast<int>(k), {loop}).size());
    int edges = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.num_edges()); ++e) {
      auto [a, b] = c.edge_faces(e);
      if (comp_of[a] == static_cast<int>(k) || comp_of[b] == static_cast<int>(k)) ++edges;
    }
    rep.side_vertices.push_back(inner);
    rep.side_edges.push_back(edges);
    const std::string side = "side of loop " + std::to_string(loop) + " holding face " + std::to_string(comps[k].front());
    check(rep.verdicts, "odd vertex count inside " + side, inner % 2 == 1, std::to_string(inner));
    check(rep.verdicts, "4V(U) + 3V(L) = 2E on " + side, 4 * inner + 3 * rep.on_loop == 2 * edges,
          std::to_string(4 * inner + 3 * rep.on_loop) + " vs " + std::to_string(2 * edges));
  }
  return rep;
}

ParityReport parity_theorem(const SurfaceComplex& c) {
  require_sphere(c);
  ParityReport rep;
  rep.N = static_cast<int>(c.num_loops());
  rep.V = static_cast<int>(c.num_vertices());
  rep.F = static_cast<int>(c.num_faces());
  bool a = rep.N % 2 == 1, b = rep.V % 4 == 2, f = rep.F % 4 == 0;
  check(rep.verdicts, "N is odd", a, std::to_string(rep.N));
  check(rep.verdicts, "V = 2 mod 4", b, std::to_string(rep.V));
  check(rep.verdicts, "F = 0 mod 4", f, std::to_string(rep.F));
  check(rep.verdicts, "F = 0 mod 8", rep.F % 8 == 0, std::to_string(rep.F));
  check(rep.verdicts, "the three conditions agree", a == b && b == f);
  return rep;
}

CornerPairing corner_pairing(const SurfaceComplex& c, std::uint64_t budget) {
  require_sphere(c);
  CornerPairing res;
  const int V = static_cast<int>(c.num_vertices());
  const int N = static_cast<int>(c.num_loops());

  struct Candidate {
    VertexId q;
    std::size_t size;
    Label i, j;
  };
  std::map<std::pair<VertexId, VertexId>, Candidate> best;
  std::set<std::pair<Label, Label>> crossing;
  for (VertexId v = 0; v < V; ++v) {
    auto l = c.vertex_labels(v);
    if (l[0] != l[1]) crossing.insert({std::min(l[0], l[1]), std::max(l[0], l[1])});
  }
  for (auto [i, j] : crossing)
    for (const auto& e : eyes(c, i, j)) {
      if (!e.is_eye()) continue;
      VertexId p = e.corners[0], q = e.corners[1];
      Candidate cand{q, e.faces.size(), i, j};
      auto it = best.find({p, q});
      if (it == best.end() || std::tie(cand.size, cand.i, cand.j) < std::tie(it->second.size, it->second.i, it->second.j))
        best[{p, q}] = cand;
    }
  std::vector<std::vector<Candidate>> options(V);
  for (const auto& [pq, cand] : best) {
    options[pq.first].push_back(cand);
    Candidate back = cand;
    back.q = pq.first;
    options[pq.second].push_back(back);
  }
  for (auto& o : options)
    std::sort(o.begin(), o.end(), [](const Candidate& a, const Candidate& b) { return a.q < b.q; });

  std::vector<int> mate(V, -1);
  std::vector<Candidate> chosen(V);
  bool exhausted = false;
  std::function<bool()> search = [&]() -> bool {
    int p = -1;
    for (int v = 0; v < V; ++v)
      if (mate[v] < 0) {
        p = v;
        break;
      }
    if (p < 0) return true;
    for (const auto& cand : options[p]) {
      if (mate[cand.q] >= 0 || cand.q == p) continue;
      if (++res.nodes > budget) {
        exhausted = true;
        return false;
      }
      mate[p] = cand.q;
      mate[cand.q] = p;
      chosen[p] = cand;
      if (search()) return true;
      mate[p] = mate[cand.q] = -1;
      if (exhausted) return false;
    }
    return false;
  };
  res.found = V % 2 == 0 && search();
  if (!res.found) {
    check(res.verdicts, "corner pairing exists", false, exhausted ? "search budget exhausted" : "no pairing found");
    return res;
  }
  for (VertexId p = 0; p < V; ++p)
    if (p < mate[p]) {
      res.pairs.push_back({p, mate[p]});
      res.witness.push_back({chosen[p].i, chosen[p].j});
    }
  check(res.verdicts, "corner pairing exists", true, std::to_string(res.pairs.size()) + " pairs");

  // Side U_k of each loop: the component holding face 0.
  std::vector<std::vector<bool>> inside(N, std::vector<bool>(V, false));
  for (Label k = 0; k < N; ++k) {
    auto comps = complement_components(c, {k});
    auto comp_of = component_of_faces(c, comps);
    for (VertexId v : interior_vertices(c, comp_of, comp_of[0], {k})) inside[k][v] = true;
  }
  res.separated_pairs.assign(N, 0);
  res.separating_loops.assign(res.pairs.size(), 0);
  for (Label k = 0; k < N; ++k)
    for (std::size_t p = 0; p < res.pairs.size(); ++p)
      if (inside[k][res.pairs[p][0]] != inside[k][res.pairs[p][1]]) {
        res.separated_pairs[k]++;
        res.separating_loops[p]++;
      }
  std::vector<int> bad_loops, bad_pairs;
  for (Label k = 0; k < N; ++k)
    if (res.separated_pairs[k] % 2 == 0) bad_loops.push_back(k);
  for (std::size_t p = 0; p < res.pairs.size(); ++p)
    if (res.separating_loops[p] % 2 == 0) bad_pairs.push_back(static_cast<int>(p));
  check(res.verdicts, "|P_i| odd for every loop", bad_loops.empty(), bad_loops.empty() ? "" : "loops " + join(bad_loops));
  check(res.verdicts, "|L(p)| odd for every pair", bad_pairs.empty(), bad_pairs.empty() ? "" : "pairs " + join(bad_pairs));
  int s1 = 0, s2 = 0;
  for (int x : res.separated_pairs) s1 += x;
  for (int x : res.separating_loops) s2 += x;
  check(res.verdicts, "sum |P_i| = sum |L(p)|", s1 == s2, std::to_string(s1) + " vs " + std::to_string(s2));
  return res;
}

SphereSuiteReport run_sphere_suite(const SurfaceComplex& c) {
  SphereSuiteReport rep;
  auto fold = [&](const std::string& name, const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
      if (!v.pass) {
        check(rep.verdicts, name, false, v.name + (v.detail.empty() ? "" : ": " + v.detail));
        return;
      }
    check(rep.verdicts, name, true, std::to_string(vs.size()) + " checks");
  };

  for (const auto& v : parity_theorem(c).verdicts) rep.verdicts.push_back(v);

  FaceColoring col;
  try {
    col = bicolor(c);
    check(rep.verdicts, "bicolouring", true,
          std::to_string(col.count(Color::Black)) + " black, " + std::to_string(col.count(Color::White)) + " white");
  } catch (const Error& e) {
    check(rep.verdicts, "bicolouring", false, e.what());
    return rep;
  }

  std::vector<Verdict> balance = color_balance(c, col).verdicts;
  std::vector<Verdict> parities, eye_verdicts;
  const Label N = static_cast<Label>(c.num_loops());
  for (Label i = 0; i < N; ++i) {
    for (auto& v : color_balance(c, col, i).verdicts) balance.push_back(std::move(v));
    for (auto& v : vertex_parities(c, i).verdicts) parities.push_back(std::move(v));
  }
  std::set<std::pair<Label, Label>> crossing;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    auto l = c.vertex_labels(v);
    if (l[0] != l[1]) crossing.insert({std::min(l[0], l[1]), std::max(l[0], l[1])});
  }
  int eye_count = 0, raw = 0;
  for (auto [i, j] : crossing)
    for (const auto& e : eyes(c, i, j)) {
      if (!e.is_eye()) {
        ++raw;
        continue;
      }
      ++eye_count;
      for (auto& v : eye_checks(c, e, col).verdicts) eye_verdicts.push_back(std::move(v));
    }
  fold("colour balance (sphere and every loop side)", balance);
  fold("vertex parities on every loop", parities);
  fold("eye checks (" + std::to_string(eye_count) + " eyes, " + std::to_string(raw) + " raw components)", eye_verdicts);
  fold("corner pairing", corner_pairing(c).verdicts);
  return rep;
}

}  // namespace hypfan
