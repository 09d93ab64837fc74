#include "hypfan/flow.hpp"

#include <algorithm>
#include <queue>

#include "hypfan/error.hpp"

namespace hypfan {

Skeleton skeleton(const SurfaceComplex& c) {
  Skeleton s;
  s.n = 2;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto l = c.vertex_labels(static_cast<VertexId>(v));
    s.vertex_labels.push_back({l[0], l[1]});
  }
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    auto [a, b] = c.edge_vertices(static_cast<EdgeId>(e));
    s.edges.push_back({a, b, {c.edge_label(static_cast<EdgeId>(e))}});
  }
  for (const auto& f : c.faces()) s.domain_corners.push_back(f.corners);
  s.euler = c.euler_characteristic();
  return s;
}

Skeleton skeleton(const CellComplex3& c) {
  Skeleton s;
  s.n = 3;
  for (std::size_t v = 0; v < c.count(0); ++v) s.vertex_labels.push_back(c.labels_at(0, static_cast<int>(v)));
  for (std::size_t e = 0; e < c.count(1); ++e) {
    const auto& b = c.boundary(1, static_cast<int>(e));
    if (b.size() != 2) throw Error(ErrorCode::MalformedInput, "1-cell " + std::to_string(e) + " lacks two endpoints");
    s.edges.push_back({b[0], b[1], c.labels_at(1, static_cast<int>(e))});
  }
  for (std::size_t d = 0; d < c.count(3); ++d) s.domain_corners.push_back(c.vertices_of(3, static_cast<int>(d)));
  s.euler = c.euler_characteristic();
  return s;
}

Direction::Direction(Vec w, const Fan& fan, const std::vector<std::vector<Label>>& cooccurring) : w_(std::move(w)) {
  auto g = is_generic(w_, fan, cooccurring);
  if (!g.generic) {
    std::string witness;
    for (Label l : g.witness) witness += (witness.empty() ? "" : ",") + std::to_string(l);
    throw Error(ErrorCode::NonGenericDirection, "w = " + to_string(w_) + " lies in the span of labels {" + witness + "}");
  }
}

VertexIndex vertex_index(const Skeleton& s, int vertex, const Fan& fan, const Vec& w) {
  VertexIndex vi;
  vi.vertex = vertex;
  vi.labels = s.vertex_labels.at(vertex);
  std::vector<Label> sorted = vi.labels;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(vi.labels.size()) != s.n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::DegenerateCorner, "vertex " + std::to_string(vertex) + " is not on " + std::to_string(s.n) +
                                                 " distinct hypersurfaces");
  std::vector<Vec> basis;
  for (Label l : vi.labels) basis.push_back(fan.at(l));
  auto alpha = solve_in_basis(basis, w);
  if (!alpha) throw Error(ErrorCode::DimensionMismatch, "direction outside the span of the fan vectors");
  vi.alpha = std::move(*alpha);
  for (std::size_t i = 0; i < vi.alpha.size(); ++i) {
    int sg = sign(vi.alpha[i]);
    if (sg == 0)
      throw Error(ErrorCode::NonGenericDirection, "w has no component along label " + std::to_string(vi.labels[i]) +
                                                      " at vertex " + std::to_string(vertex));
    if (sg > 0) ++vi.index;
  }
  return vi;
}

IndexCounts index_counts(const Skeleton& s, const Fan& fan, const Vec& w) {
  IndexCounts ic;
  ic.c.assign(s.n + 1, 0);
  for (std::size_t v = 0; v < s.vertex_labels.size(); ++v) ic.c[vertex_index(s, static_cast<int>(v), fan, w).index]++;
  return ic;
}

FlowGraph orient_edges(const Skeleton& s, const Fan& fan, const Vec& w) {
  FlowGraph g;
  g.n = s.n;
  for (std::size_t v = 0; v < s.vertex_labels.size(); ++v) g.nodes.push_back(vertex_index(s, static_cast<int>(v), fan, w));

  // Sign of w along the hypersurface through p that does not contain the edge.
  auto end_sign = [&](int p, const Skeleton::Edge& e, int edge_id) {
    const auto& node = g.nodes[p];
    int found = -1, matches = 0;
    for (std::size_t i = 0; i < node.labels.size(); ++i)
      if (std::find(e.labels.begin(), e.labels.end(), node.labels[i]) == e.labels.end()) {
        found = static_cast<int>(i);
        ++matches;
      }
    if (matches != 1)
      throw Error(ErrorCode::InconsistentEdgeSigns, "edge " + std::to_string(edge_id) +
                                                        " does not leave exactly one hypersurface at vertex " +
                                                        std::to_string(p));
    return sign(node.alpha[found]);
  };

  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const auto& e = s.edges[i];
    int sa = end_sign(e.a, e, static_cast<int>(i));
    int sb = end_sign(e.b, e, static_cast<int>(i));
    if (sa == sb)
      throw Error(ErrorCode::InconsistentEdgeSigns, "both ends of edge " + std::to_string(i) + " are " +
                                                        (sa > 0 ? "attracting" : "repelling"));
    g.arcs.push_back(sa > 0 ? FlowGraph::Arc{static_cast<int>(i), e.b, e.a} : FlowGraph::Arc{static_cast<int>(i), e.a, e.b});
  }
  return g;
}

std::vector<std::vector<int>> detect_cycles(const FlowGraph& g) {
  const int V = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> out_arcs(V);
  for (const auto& a : g.arcs) out_arcs[a.tail].push_back(a.head);
  std::vector<int> color(V, 0);
  std::vector<std::vector<int>> cycles;
  for (int root = 0; root < V; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out_arcs[v].size()) {
        int w = out_arcs[v][next++];
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        } else if (color[w] == 1) {
          std::vector<int> cycle;
          std::size_t k = stack.size();
          while (k > 0 && stack[k - 1].first != w) --k;
          for (std::size_t j = k - 1; j < stack.size(); ++j) cycle.push_back(stack[j].first);
          cycles.push_back(std::move(cycle));
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return cycles;
}

std::vector<int> assign_levels(const FlowGraph& g) {
  const int V = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> out_arcs(V);
  std::vector<int> indegree(V, 0);
  for (const auto& a : g.arcs) {
    out_arcs[a.tail].push_back(a.head);
    indegree[a.head]++;
  }
  std::vector<int> level(V, 0);
  std::queue<int> ready;
  for (int v = 0; v < V; ++v)
    if (indegree[v] == 0) ready.push(v);
  int done = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++done;
    for (int w : out_arcs[v]) {
      level[w] = std::max(level[w], level[v] + 1);
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (done != V)
    throw Error(ErrorCode::CyclicFlowGraph, std::to_string(V - done) + " vertices lie on or behind a directed cycle");
  int top = V ? *std::max_element(level.begin(), level.end()) : 0;
  for (int v = 0; v < V; ++v)
    if (out_arcs[v].empty()) level[v] = top;
  return level;
}

DomainCountReport check_domain_count(const Skeleton& s, const Fan& fan, const Vec& w) {
  DomainCountReport r;
  r.n = s.n;
  r.domains = static_cast<int>(s.domain_corners.size());
  std::vector<int> index(s.vertex_labels.size());
  for (std::size_t v = 0; v < index.size(); ++v) {
    index[v] = vertex_index(s, static_cast<int>(v), fan, w).index;
    if (index[v] == s.n) ++r.attractors;
    if (index[v] == 0) ++r.repellers;
  }
  const int pieces = 1 << s.n;
  check(r.verdicts, "domains = attractors * 2^n", r.domains == r.attractors * pieces,
        std::to_string(r.domains) + " vs " + std::to_string(r.attractors) + "*" + std::to_string(pieces));
  check(r.verdicts, "domains = repellers * 2^n", r.domains == r.repellers * pieces,
        std::to_string(r.domains) + " vs " + std::to_string(r.repellers) + "*" + std::to_string(pieces));

  std::string bad_att, bad_rep;
  for (int d = 0; d < r.domains; ++d) {
    std::vector<int> corners = s.domain_corners[d];
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    int att = -1, natt = 0, nrep = 0;
    for (int v : corners) {
      if (index[v] == s.n) {
        att = v;
        ++natt;
      }
      if (index[v] == 0) ++nrep;
    }
    if (natt != 1) bad_att += (bad_att.empty() ? "" : ",") + std::to_string(d);
    if (nrep != 1) bad_rep += (bad_rep.empty() ? "" : ",") + std::to_string(d);
    if (natt == 1) r.jigsaw[att].push_back(d);
  }
  check(r.verdicts, "one attractor corner per domain", bad_att.empty(), bad_att.empty() ? "" : "domains " + bad_att);
  check(r.verdicts, "one repeller corner per domain", bad_rep.empty(), bad_rep.empty() ? "" : "domains " + bad_rep);
  bool pieces_ok = static_cast<int>(r.jigsaw.size()) == r.attractors;
  for (const auto& [a, ds] : r.jigsaw) pieces_ok = pieces_ok && static_cast<int>(ds.size()) == pieces;
  check(r.verdicts, "jigsaw pieces of 2^n domains", pieces_ok);
  return r;
}

PairDecompositionReport attractor_pair_decomposition_s2(const SurfaceComplex& c, const Fan& fan, const Vec& w) {
  if (c.euler_characteristic() != 2 || !c.surface().orientable)
    throw Error(ErrorCode::NotOnSphere, "the loop-pair formula is stated for the sphere");
  PairDecompositionReport r;
  std::map<std::pair<Label, Label>, int> crossings;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto l = c.vertex_labels(static_cast<VertexId>(v));
    if (l[0] != l[1]) crossings[{std::min(l[0], l[1]), std::max(l[0], l[1])}]++;
  }
  for (const auto& [ij, count] : crossings) {
    const Vec& a = fan.at(ij.first);
    const Vec& b = fan.at(ij.second);
    if (sign(cross2(a, b)) == 0) continue;
    if (cone_contains({a, b}, w, false)) {
      r.contributing.push_back({ij.first, ij.second, count});
      r.total += count;
    }
  }
  Skeleton s = skeleton(c);
  r.attractors = index_counts(s, fan, w).c[2];
  check(r.verdicts, "loop-pair sum equals attractor count", r.total == r.attractors,
        std::to_string(r.total) + " vs " + std::to_string(r.attractors));
  check(r.verdicts, "loop-pair sum is even", r.total % 2 == 0, std::to_string(r.total));
  return r;
}

MorseReport morse_inequalities(const IndexCounts& counts, const std::vector<int>& betti) {
  MorseReport r;
  const auto& c = counts.c;
  if (!check(r.verdicts, "betti length matches", c.size() == betti.size(),
             std::to_string(c.size()) + " counts, " + std::to_string(betti.size()) + " betti numbers"))
    return r;
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    long lhs = 0, rhs = 0;
    for (int k = 0; k <= i; ++k) {
      long s = ((i - k) % 2 == 0) ? 1 : -1;
      lhs += s * c[k];
      rhs += s * betti[k];
    }
    std::string detail = std::to_string(lhs) + (i == n ? " = " : " >= ") + std::to_string(rhs);
    if (i == n)
      check(r.verdicts, "alternating sum equality at i=" + std::to_string(i), lhs == rhs, detail);
    else
      check(r.verdicts, "alternating inequality at i=" + std::to_string(i), lhs >= rhs, detail);
  }
  for (int i = 0; i <= n; ++i)
    check(r.verdicts, "c_" + std::to_string(i) + " >= b_" + std::to_string(i), c[i] >= betti[i],
          std::to_string(c[i]) + " vs " + std::to_string(betti[i]));
  long v = 0, b = 0;
  for (int i = 0; i <= n; ++i) {
    v += c[i];
    b += betti[i];
  }
  check(r.verdicts, "fixed points >= sum of betti numbers", v >= b, std::to_string(v) + " vs " + std::to_string(b));
  return r;
}

}  // namespace hypfan
