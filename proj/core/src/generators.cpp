#include "hypfan/generators.hpp"

#include <algorithm>
#include <map>

#include "hypfan/error.hpp"
#include "hypfan/fansearch.hpp"

namespace hypfan {

NamedSurface surface_from_faces(const std::vector<std::vector<FaceStep>>& faces) {
  NamedSurface out;
  std::map<std::string, int> vid;
  std::map<std::string, int> eid;
  std::vector<std::array<int, 2>> edge_ends;  // vertex of dart 2e, dart 2e+1
  std::vector<int> uses;

  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = vid.emplace(name, static_cast<int>(out.vertex_names.size()));
    if (fresh) out.vertex_names.push_back(name);
    return it->second;
  };
  auto key_of = [](const std::string& u, const std::string& v, const std::string& tag) {
    return (u < v ? u + "|" + v : v + "|" + u) + "|" + tag;
  };
  // Dart of edge (u, v, tag) at vertex u.
  auto dart = [&](int u, int v, const std::string& key) {
    auto [it, fresh] = eid.emplace(key, static_cast<int>(out.edge_keys.size()));
    if (fresh) {
      out.edge_keys.push_back(key);
      edge_ends.push_back({u, v});
      uses.push_back(0);
    }
    int e = it->second;
    if (u == v) throw Error(ErrorCode::MalformedInput, "loop edge " + key + " is not supported");
    if (edge_ends[e][0] == u && edge_ends[e][1] == v) return 2 * e;
    if (edge_ends[e][0] == v && edge_ends[e][1] == u) return 2 * e + 1;
    throw Error(ErrorCode::MalformedInput, "edge " + key + " used between different vertices");
  };

  std::map<int, int> next;  // rotation successor
  for (const auto& face : faces) {
    const std::size_t m = face.size();
    std::vector<int> vs;
    for (const auto& s : face) vs.push_back(vertex(s.vertex));
    for (std::size_t k = 0; k < m; ++k) {
      const auto& prev = face[(k + m - 1) % m];
      const auto& here = face[k];
      const auto& after = face[(k + 1) % m];
      int u = vs[(k + m - 1) % m], v = vs[k], w = vs[(k + 1) % m];
      int d_in = dart(v, u, key_of(prev.vertex, here.vertex, prev.edge_tag));
      int d_out = dart(v, w, key_of(here.vertex, after.vertex, here.edge_tag));
      uses[d_out / 2]++;
      if (!next.emplace(d_out, d_in).second)
        throw Error(ErrorCode::MalformedInput, "dart of edge " + out.edge_keys[d_out / 2] + " starts two corners");
    }
  }
  for (std::size_t e = 0; e < uses.size(); ++e)
    if (uses[e] != 2) throw Error(ErrorCode::MalformedInput, "edge " + out.edge_keys[e] + " borders " +
                                                                 std::to_string(uses[e]) + " face sides");

  const int V = static_cast<int>(out.vertex_names.size());
  std::vector<std::vector<int>> darts_at(V);
  for (std::size_t e = 0; e < edge_ends.size(); ++e) {
    darts_at[edge_ends[e][0]].push_back(static_cast<int>(2 * e));
    darts_at[edge_ends[e][1]].push_back(static_cast<int>(2 * e + 1));
    out.input.edges.push_back({static_cast<int>(2 * e), static_cast<int>(2 * e + 1)});
  }
  for (int v = 0; v < V; ++v) {
    if (darts_at[v].size() != 4)
      throw Error(ErrorCode::NonQuadrivalentVertex, "vertex " + out.vertex_names[v] + " has " +
                                                        std::to_string(darts_at[v].size()) + " darts");
    int start = *std::min_element(darts_at[v].begin(), darts_at[v].end());
    std::array<int, 4> rot{};
    int d = start;
    for (int k = 0; k < 4; ++k) {
      rot[k] = d;
      d = next.at(d);
    }
    if (d != start) throw Error(ErrorCode::MalformedInput, "corners at " + out.vertex_names[v] + " do not close up");
    out.input.vertices.push_back(rot);
  }
  return out;
}

namespace {

using Steps = std::vector<FaceStep>;

char flip(char s) { return s == '+' ? '-' : s == '-' ? '+' : s; }

struct Reflector {
  int g;
  // axis 0, 1, 2 for x, y, z
  std::string vertex(const std::string& n, int axis) const {
    if (axis == 0) {
      if (n == "OR") return "OL";
      if (n == "OL") return "OR";
      if (n[0] == 'h' && (n[1] == 'L' || n[1] == 'R')) {
        int m = std::stoi(n.substr(2));
        return std::string("h") + (n[1] == 'L' ? 'R' : 'L') + std::to_string(g + 1 - m);
      }
      if (n[0] == 'Y' || n[0] == 'Z') return std::string(1, n[0]) + flip(n[1]) + n[2];
      return n;
    }
    if (axis == 1) {
      if (n == "OT") return "OB";
      if (n == "OB") return "OT";
      if (n == "hT") return "hB";
      if (n == "hB") return "hT";
      if (n[0] == 'Z') return std::string("Z") + n[1] + flip(n[2]);
      return n;
    }
    if (n == "P+") return "P-";
    if (n == "P-") return "P+";
    if (n[0] == 'Y') return std::string("Y") + n[1] + flip(n[2]);
    return n;
  }
  std::string tag(const std::string& t, int axis) const {
    std::string s = t;
    s[1 + axis] = flip(s[1 + axis]);
    return s;
  }
};

Steps reflect(const Steps& face, const Reflector& r, int axis) {
  Steps out;
  for (const auto& s : face) out.push_back({r.vertex(s.vertex, axis), r.tag(s.edge_tag, axis)});
  return out;
}

Steps reversed(const Steps& face) {
  const int m = static_cast<int>(face.size());
  Steps out(m);
  for (int k = 0; k < m; ++k) out[k] = {face[m - 1 - k].vertex, face[((m - 2 - k) % m + m) % m].edge_tag};
  return out;
}

// Polygons in the octant x, y, z > 0. Tags: plane letter then the signs of
// the midpoint coordinates ('0' in the cutting plane; A is the plane x = a).
std::vector<Steps> first_octant(int g, int variant) {
  const std::string X = "X0++", Y = "Y+0+", Z = "Z++0", A = "A+++";
  Steps big;
  std::string before_or;
  if (g % 2 == 0) {
    int k = g / 2 + 1;
    big.push_back({"P+", Y});
    for (int m = k; m <= g; ++m) {
      big.push_back({"hL" + std::to_string(m), Z});
      big.push_back({"hR" + std::to_string(m), Y});
    }
  } else {
    int c = (g + 1) / 2;
    big.push_back({"hR" + std::to_string(c), Y});
    for (int m = c + 1; m <= g; ++m) {
      big.push_back({"hL" + std::to_string(m), Z});
      big.push_back({"hR" + std::to_string(m), Y});
    }
  }
  std::vector<Steps> out;
  if (variant == 16) {
    big.push_back({"Y++", A});
    big.push_back({"Z++", Z});
    out.push_back({{"Y++", Y}, {"OR", Z}, {"Z++", A}});
  } else {
    big.push_back({"OR", Z});
  }
  big.push_back({"OT", X});
  if (g % 2 == 1) big.push_back({"hT", Z});
  out.insert(out.begin(), big);
  return out;
}

}  // namespace

SurfaceComplex genus_complex(int g, int variant, DartInvolution* sigma) {
  if (g < 0) throw Error(ErrorCode::MalformedInput, "genus must be non-negative");
  if (variant != 8 && variant != 16) throw Error(ErrorCode::MalformedInput, "variant must be 8 or 16");
  if (variant == 16 && g < 1) throw Error(ErrorCode::MalformedInput, "the sixteen-domain variant needs genus >= 1");
  Reflector r{g};
  std::vector<Steps> faces;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz)
        for (Steps f : first_octant(g, variant)) {
          if (sx) f = reflect(f, r, 0);
          if (sy) f = reflect(f, r, 1);
          if (sz) f = reflect(f, r, 2);
          if ((sx + sy + sz) % 2 == 1) f = reversed(f);
          faces.push_back(std::move(f));
        }
  NamedSurface ns = surface_from_faces(faces);
  ns.input.surface = Surface{true, g};

  if (sigma) {
    std::map<std::string, int> vid, eid;
    for (std::size_t i = 0; i < ns.vertex_names.size(); ++i) vid[ns.vertex_names[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < ns.edge_keys.size(); ++i) eid[ns.edge_keys[i]] = static_cast<int>(i);
    auto antipode = [&](const std::string& n) { return r.vertex(r.vertex(r.vertex(n, 0), 1), 2); };
    sigma->map.assign(4 * ns.vertex_names.size(), -1);
    for (std::size_t e = 0; e < ns.edge_keys.size(); ++e) {
      const std::string& key = ns.edge_keys[e];
      auto p1 = key.find('|'), p2 = key.find('|', p1 + 1);
      std::string u = key.substr(0, p1), v = key.substr(p1 + 1, p2 - p1 - 1), tag = key.substr(p2 + 1);
      std::string su = antipode(u), sv = antipode(v);
      std::string stag = r.tag(r.tag(r.tag(tag, 0), 1), 2);
      std::string skey = (su < sv ? su + "|" + sv : sv + "|" + su) + "|" + stag;
      int f = eid.at(skey);
      // dart 2e sits at the first-left vertex of edge e
      const auto& de = ns.input.edges[e];
      const auto& df = ns.input.edges[f];
      auto vertex_of_dart = [&](int d) {
        for (std::size_t w = 0; w < ns.input.vertices.size(); ++w)
          for (int x : ns.input.vertices[w])
            if (x == d) return static_cast<int>(w);
        return -1;
      };
      int a_img = vid.at(antipode(ns.vertex_names[vertex_of_dart(de[0])]));
      if (vertex_of_dart(df[0]) == a_img) {
        sigma->map[de[0]] = df[0];
        sigma->map[de[1]] = df[1];
      } else {
        sigma->map[de[0]] = df[1];
        sigma->map[de[1]] = df[0];
      }
    }
  }
  return SurfaceComplex::build(std::move(ns.input));
}

Generated2 generate_octahedral() {
  SurfaceComplex c = genus_complex(0, 8);
  Fan fan(2);
  fan.set(0, {Rational(1), Rational(0)});
  fan.set(1, {Rational(0), Rational(1)});
  fan.set(2, {Rational(-1), Rational(-1)});
  return {std::move(c), std::move(fan), std::nullopt};
}

Generated2 generate_genus_g(int g, int variant, std::uint64_t budget) {
  DartInvolution sigma;
  SurfaceComplex c = genus_complex(g, variant, variant == 16 ? &sigma : nullptr);
  auto found = search_fan(c, budget);
  if (found.status != SearchStatus::Found)
    throw Error(ErrorCode::FanSearchFailed, "genus " + std::to_string(g) + ", " + std::to_string(variant) +
                                                " domains: " + to_string(found.status) + " (" + found.reason + ")");
  Generated2 out{std::move(c), std::move(*found.fan), std::nullopt};
  if (variant == 16) out.involution = std::move(sigma);
  return out;
}

Generated2 generate_nonorientable(int g, std::uint64_t budget) {
  DartInvolution sigma;
  SurfaceComplex c = genus_complex(g, 16, &sigma);
  SurfaceComplex q = quotient_by_involution(c, sigma);
  auto found = search_fan(q, budget);
  if (found.status != SearchStatus::Found)
    throw Error(ErrorCode::FanSearchFailed, "quotient of genus " + std::to_string(g) + ": " + to_string(found.status) +
                                                " (" + found.reason + ")");
  return {std::move(q), std::move(*found.fan), std::nullopt};
}

Fan s3_fan() {
  Fan f(3);
  auto r = [](long x) { return Rational(x); };
  f.set(0, {r(-1), r(0), r(0)});
  f.set(1, {r(1), r(-1), r(0)});
  f.set(2, {r(1), r(1), r(0)});
  f.set(3, {r(1), r(0), r(-1)});
  f.set(4, {r(1), r(0), r(1)});
  return f;
}

namespace {

// Cell numbering of the 3-sphere; a, b are positions mod 4 along the two
// circle factors of the splitting torus.
struct S3Index {
  static int m(int x) { return ((x % 4) + 4) % 4; }
  static int T(int a, int b) { return 4 * m(a) + m(b); }
  static int C1(int a) { return 16 + m(a); }
  static int C2(int b) { return 20 + m(b); }

  static int TS(int a, int b) { return 4 * m(a) + m(b); }
  static int TT(int a, int b) { return 16 + 4 * m(a) + m(b); }
  static int K1(int a) { return 32 + m(a); }
  static int K2(int b) { return 36 + m(b); }
  static int R1(int a, int b) { return 40 + 4 * m(a) + m(b); }
  static int R2(int a, int b) { return 56 + 4 * m(a) + m(b); }

  static int Q(int a, int b) { return 4 * m(a) + m(b); }
  static int D1(int a, int b) { return 16 + 4 * m(a) + m(b); }
  static int P1(int a, int b) { return 32 + 4 * m(a) + m(b); }
  static int D2(int a, int b) { return 48 + 4 * m(a) + m(b); }
  static int P2(int a, int b) { return 64 + 4 * m(a) + m(b); }

  static int W1(int a, int b) { return 4 * m(a) + m(b); }
  static int W2(int a, int b) { return 16 + 4 * m(a) + m(b); }

  static Label H1(int a) { return 1 + m(a) % 2; }
  static Label H2(int b) { return 3 + m(b) % 2; }
};

}  // namespace

Generated3 generate_s3() {
  using I = S3Index;
  std::array<std::vector<std::vector<int>>, 4> cells;
  cells[0].assign(24, {});
  cells[1].resize(72);
  cells[2].resize(80);
  cells[3].resize(32);
  std::vector<Label> labels(80);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cells[1][I::TS(a, b)] = {I::T(a, b), I::T(a + 1, b)};
      cells[1][I::TT(a, b)] = {I::T(a, b), I::T(a, b + 1)};
      cells[1][I::R1(a, b)] = {I::C1(a), I::T(a, b)};
      cells[1][I::R2(a, b)] = {I::C2(b), I::T(a, b)};

      cells[2][I::Q(a, b)] = {I::TS(a, b), I::TS(a, b + 1), I::TT(a, b), I::TT(a + 1, b)};
      labels[I::Q(a, b)] = 0;
      cells[2][I::D1(a, b)] = {I::R1(a, b), I::R1(a, b + 1), I::TT(a, b)};
      labels[I::D1(a, b)] = I::H1(a);
      cells[2][I::P1(a, b)] = {I::K1(a), I::TS(a, b), I::R1(a, b), I::R1(a + 1, b)};
      labels[I::P1(a, b)] = I::H2(b);
      cells[2][I::D2(a, b)] = {I::R2(a, b), I::R2(a + 1, b), I::TS(a, b)};
      labels[I::D2(a, b)] = I::H2(b);
      cells[2][I::P2(a, b)] = {I::K2(b), I::TT(a, b), I::R2(a, b), I::R2(a, b + 1)};
      labels[I::P2(a, b)] = I::H1(a);

      cells[3][I::W1(a, b)] = {I::Q(a, b), I::D1(a, b), I::D1(a + 1, b), I::P1(a, b), I::P1(a, b + 1)};
      cells[3][I::W2(a, b)] = {I::Q(a, b), I::D2(a, b), I::D2(a, b + 1), I::P2(a, b), I::P2(a + 1, b)};
    }
  for (int a = 0; a < 4; ++a) {
    cells[1][I::K1(a)] = {I::C1(a), I::C1(a + 1)};
    cells[1][I::K2(a)] = {I::C2(a), I::C2(a + 1)};
  }

  CellInvolution sigma;
  for (int k = 0; k < 4; ++k) sigma.map[k].resize(cells[k].size());
  for (int a = 0; a < 4; ++a) {
    sigma.map[0][I::C1(a)] = I::C1(a + 2);
    sigma.map[0][I::C2(a)] = I::C2(a + 2);
    sigma.map[1][I::K1(a)] = I::K1(a + 2);
    sigma.map[1][I::K2(a)] = I::K2(a + 2);
    for (int b = 0; b < 4; ++b) {
      sigma.map[0][I::T(a, b)] = I::T(a + 2, b + 2);
      sigma.map[1][I::TS(a, b)] = I::TS(a + 2, b + 2);
      sigma.map[1][I::TT(a, b)] = I::TT(a + 2, b + 2);
      sigma.map[1][I::R1(a, b)] = I::R1(a + 2, b + 2);
      sigma.map[1][I::R2(a, b)] = I::R2(a + 2, b + 2);
      sigma.map[2][I::Q(a, b)] = I::Q(a + 2, b + 2);
      sigma.map[2][I::D1(a, b)] = I::D1(a + 2, b + 2);
      sigma.map[2][I::P1(a, b)] = I::P1(a + 2, b + 2);
      sigma.map[2][I::D2(a, b)] = I::D2(a + 2, b + 2);
      sigma.map[2][I::P2(a, b)] = I::P2(a + 2, b + 2);
      sigma.map[3][I::W1(a, b)] = I::W1(a + 2, b + 2);
      sigma.map[3][I::W2(a, b)] = I::W2(a + 2, b + 2);
    }
  }
  return {CellComplex3(std::move(cells), std::move(labels)), s3_fan(), std::move(sigma)};
}

Generated3 generate_rp3() {
  Generated3 s3 = generate_s3();
  return {quotient_by_involution(s3.complex, *s3.involution), s3.fan, std::nullopt};
}

SurfaceComplex two_loops_crossing_twice() {
  std::vector<std::vector<FaceStep>> faces = {
      {{"x", "A+"}, {"y", "B+"}},
      {{"x", "B+"}, {"y", "A-"}},
      {{"x", "A-"}, {"y", "B-"}},
      {{"x", "B-"}, {"y", "A+"}},
  };
  return SurfaceComplex::build(surface_from_faces(faces).input);
}

}  // namespace hypfan
