#include "hypfan/fan.hpp"

#include <algorithm>
#include <set>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/error.hpp"

namespace hypfan {

void Fan::set(Label label, Vec v) {
  if (static_cast<int>(v.size()) != dimension_)
    throw Error(ErrorCode::DimensionMismatch, "vector for label " + std::to_string(label) + " has " +
                                                  std::to_string(v.size()) + " coordinates, fan dimension is " +
                                                  std::to_string(dimension_));
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "label " + std::to_string(label) + " has the zero vector");
  vectors_[label] = std::move(v);
}

const Vec& Fan::at(Label label) const {
  auto it = vectors_.find(label);
  if (it == vectors_.end()) throw Error(ErrorCode::UnknownLabel, "fan has no vector for label " + std::to_string(label));
  return it->second;
}

std::vector<Label> Fan::labels() const {
  std::vector<Label> out;
  for (const auto& [l, v] : vectors_) out.push_back(l);
  return out;
}

namespace {

// 0 for directions with angle in [0, pi), 1 for [pi, 2 pi).
int half(const Vec& v) { return (sign(v[1]) > 0 || (sign(v[1]) == 0 && sign(v[0]) > 0)) ? 0 : 1; }

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sign(cross2(a, b)) > 0;
}

std::string labels_text(std::initializer_list<Label> ls) {
  std::string s = "{";
  bool first = true;
  for (Label l : ls) {
    s += (first ? "" : ",") + std::to_string(l);
    first = false;
  }
  return s + "}";
}

// True when the cone generated by gens is not all of R^3.
bool has_separating_plane(const std::vector<Vec>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec n = cross3(gens[i], gens[j]);
      if (is_zero(n)) continue;
      bool nonneg = true, nonpos = true;
      for (const auto& g : gens) {
        int s = sign(dot(n, g));
        if (s < 0) nonneg = false;
        if (s > 0) nonpos = false;
      }
      if (nonneg || nonpos) return true;
    }
  return false;
}

}  // namespace

Compatibility face_compatible_2d(const std::vector<Label>& face, const Fan& fan) {
  if (fan.dimension() != 2) throw Error(ErrorCode::DimensionMismatch, "2D face check needs a planar fan");
  const std::size_t k = face.size();
  std::vector<Vec> v;
  for (Label l : face) v.push_back(fan.at(l));
  if (k < 3) return Compatibility::fail("Digon", std::to_string(k) + "-sided face cannot wind once");

  int turn = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const Vec& a = v[j];
    const Vec& b = v[(j + 1) % k];
    int s = sign(cross2(a, b));
    if (s == 0)
      return Compatibility::fail("AngleOutOfRange", "labels " + labels_text({face[j], face[(j + 1) % k]}) +
                                                        (sign(dot(a, b)) > 0 ? " share a direction" : " are opposite"));
    if (turn == 0) {
      turn = s;
    } else if (s != turn) {
      return Compatibility::fail("TurningSignFlip", "turn from label " + std::to_string(face[j]) + " to " +
                                                        std::to_string(face[(j + 1) % k]) + " reverses direction");
    }
  }
  int wraps = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const Vec& a = v[j];
    const Vec& b = v[(j + 1) % k];
    if (turn > 0 ? angle_less(b, a) : angle_less(a, b)) ++wraps;
  }
  if (wraps != 1) return Compatibility::fail("WindingNotOne", "walk winds " + std::to_string(wraps) + " times");
  return Compatibility::pass();
}

Compatibility domain_compatible_3d(const DomainCorners& domain, const Fan& fan) {
  if (fan.dimension() != 3) throw Error(ErrorCode::DimensionMismatch, "3D domain check needs a spatial fan");
  const auto& cs = domain.corners;
  std::vector<std::array<Vec, 3>> gens;
  for (const auto& c : cs) {
    if (c[0] < 0 || c[1] < 0 || c[2] < 0) return Compatibility::fail("DegenerateCorner", "corner without 3 facets");
    gens.push_back({fan.at(c[0]), fan.at(c[1]), fan.at(c[2])});
    if (sign(det3(gens.back()[0], gens.back()[1], gens.back()[2])) == 0)
      return Compatibility::fail("DegenerateCorner", "coplanar vectors at corner " + labels_text({c[0], c[1], c[2]}));
  }

  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<Vec> all = {gens[i][0], gens[i][1], gens[i][2]};
      for (const auto& g : gens[j]) all.push_back(negate(g));
      if (!has_separating_plane(all))
        return Compatibility::fail("OverlappingCones", "cones at corners " + labels_text({cs[i][0], cs[i][1], cs[i][2]}) +
                                                           " and " + labels_text({cs[j][0], cs[j][1], cs[j][2]}) +
                                                           " share interior points");
    }

  std::map<std::pair<Label, Label>, std::vector<Label>> edge_cones;
  for (const auto& c : cs)
    for (int a = 0; a < 3; ++a) {
      Label p = c[(a + 1) % 3], q = c[(a + 2) % 3];
      edge_cones[{std::min(p, q), std::max(p, q)}].push_back(c[a]);
    }
  for (const auto& [pq, thirds] : edge_cones) {
    if (thirds.size() != 2)
      return Compatibility::fail("UnpairedEdgeCone", "2-cone " + labels_text({pq.first, pq.second}) + " is on " +
                                                         std::to_string(thirds.size()) + " corner cones");
    const Vec& a = fan.at(pq.first);
    const Vec& b = fan.at(pq.second);
    if (sign(det3(a, b, fan.at(thirds[0]))) * sign(det3(a, b, fan.at(thirds[1]))) >= 0)
      return Compatibility::fail("SameSideEdgeCone", "corner cones on 2-cone " + labels_text({pq.first, pq.second}) +
                                                         " lie on one side");
  }
  return Compatibility::pass();
}

namespace {

std::vector<Label> missing(const std::vector<Label>& needed, const Fan& fan) {
  std::vector<Label> out;
  for (Label l : needed)
    if (!fan.contains(l)) out.push_back(l);
  return out;
}

}  // namespace

FanReport fan_compatible(const SurfaceComplex& c, const Fan& fan) {
  if (fan.dimension() != 2) throw Error(ErrorCode::DimensionMismatch, "surface complexes need a planar fan");
  FanReport rep;
  std::vector<Label> labels;
  for (const auto& loop : c.loops()) labels.push_back(loop.id);
  rep.missing_labels = missing(labels, fan);
  if (!rep.missing_labels.empty()) {
    rep.ok = false;
    return rep;
  }
  for (std::size_t f = 0; f < c.num_faces(); ++f) {
    auto r = face_compatible_2d(c.faces()[f].labels, fan);
    rep.ok = rep.ok && r.ok;
    rep.domains.push_back({static_cast<int>(f), std::move(r)});
  }
  return rep;
}

FanReport fan_compatible(const CellComplex3& c, const Fan& fan) {
  if (fan.dimension() != 3) throw Error(ErrorCode::DimensionMismatch, "3D complexes need a spatial fan");
  FanReport rep;
  rep.missing_labels = missing(c.all_labels(), fan);
  if (!rep.missing_labels.empty()) {
    rep.ok = false;
    return rep;
  }
  for (std::size_t d = 0; d < c.count(3); ++d) {
    auto r = domain_compatible_3d(c.domain_corners(static_cast<int>(d)), fan);
    rep.ok = rep.ok && r.ok;
    rep.domains.push_back({static_cast<int>(d), std::move(r)});
  }
  return rep;
}

bool cone_contains(const std::vector<Vec>& generators, const Vec& w, bool strict) {
  for (const auto& g : generators)
    if (g.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "generator and vector lengths differ");
  if (generators.empty()) return !strict && is_zero(w);
  auto alpha = solve_in_basis(generators, w);
  if (!alpha) return false;
  for (const auto& a : *alpha) {
    int s = sign(a);
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

Genericity is_generic(const Vec& w, const Fan& fan, const std::vector<std::vector<Label>>& cooccurring, bool strict) {
  if (static_cast<int>(w.size()) != fan.dimension())
    throw Error(ErrorCode::DimensionMismatch, "direction has " + std::to_string(w.size()) + " coordinates, fan has " +
                                                  std::to_string(fan.dimension()));
  if (is_zero(w)) return {false, {}};
  std::vector<std::vector<Label>> groups;
  if (strict) {
    groups.push_back(fan.labels());
  } else {
    for (auto g : cooccurring) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      groups.push_back(std::move(g));
    }
  }
  std::set<std::vector<Label>> subsets;
  const int n = fan.dimension();
  for (const auto& g : groups) {
    const int m = static_cast<int>(g.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) >= n) continue;
      std::vector<Label> s;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(g[i]);
      subsets.insert(std::move(s));
    }
  }
  std::vector<std::vector<Label>> ordered(subsets.begin(), subsets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& s : ordered) {
    std::vector<Vec> vs;
    for (Label l : s) vs.push_back(fan.at(l));
    if (in_span(w, vs)) return {false, s};
  }
  return {true, {}};
}

std::vector<std::vector<Label>> vertex_label_sets(const SurfaceComplex& c) {
  std::vector<std::vector<Label>> out;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto l = c.vertex_labels(static_cast<VertexId>(v));
    out.push_back(l[0] == l[1] ? std::vector<Label>{l[0]} : std::vector<Label>{std::min(l[0], l[1]), std::max(l[0], l[1])});
  }
  return out;
}

std::vector<std::vector<Label>> vertex_label_sets(const CellComplex3& c) {
  std::vector<std::vector<Label>> out;
  for (std::size_t v = 0; v < c.count(0); ++v) out.push_back(c.labels_at(0, static_cast<int>(v)));
  return out;
}

}  // namespace hypfan
