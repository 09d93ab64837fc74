// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "hypfan/error.hpp"
#include "hypfan/fansearch.hpp"
#include "hypfan/flow.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/moves.hpp"
#include "hypfan/sphere2.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hypfan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Vec> generic_directions(const Fan& fan, const std::vector<std::vector<Label>>& sets, int count,
                                    std::uint64_t seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    Vec w;
    for (int i = 0; i < fan.dimension(); ++i) w.emplace_back(d(rng));
    if (is_zero(w) || !is_generic(w, fan, sets).generic) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

Outcome octahedral_baseline() {
  Outcome o;
  auto g = generate_octahedral();
  const auto& c = g.complex;
  const int V = static_cast<int>(c.num_vertices()), E = static_cast<int>(c.num_edges());
  const int F = static_cast<int>(c.num_faces()), N = static_cast<int>(c.num_loops());
  o.require(V == 6 && E == 12 && F == 8 && N == 3, "counts V,E,F,N");
  o.require(E == 2 * V, "E = 2V");
  o.require(F == V + 2, "F = V + 2");
  o.require(F == oracle::face_count(c.input()), "face count oracle");
  Fan expected(2);
  expected.set(0, {1, 0});
  expected.set(1, {0, 1});
  expected.set(2, {-1, -1});
  o.require(g.fan == expected, "fan vectors");
  auto rep = fan_compatible(c, g.fan);
  o.require(rep.ok && rep.domains.size() == 8, "fan compatible on 8 faces");
  o.detail = o.pass ? "V=6 E=12 F=8 N=3, 8/8 faces compatible" : o.detail;
  return o;
}

Outcome flow_law() {
  Outcome o;
  auto g = generate_octahedral();
  auto s = skeleton(g.complex);
  auto ws = generic_directions(g.fan, vertex_label_sets(g.complex), 20, 0, 12);
  for (const auto& w : ws) {
    Direction dir(w, g.fan, vertex_label_sets(g.complex));
    auto c = index_counts(s, g.fan, w).c;
    const std::string at = " at w=" + to_string(w);
    o.require(c == oracle::index_counts(g.complex, g.fan, w), "index oracle" + at);
    o.require(c[0] == c[2], "c0 = c2" + at);
    o.require(c[0] - c[1] + c[2] == 2, "alternating sum" + at);
    o.require(static_cast<int>(g.complex.num_faces()) == c[2] * 4 && c[2] * 4 == 8, "F = 4 c2" + at);
    auto fg = orient_edges(s, g.fan, w);
    o.require(detect_cycles(fg).empty(), "acyclic" + at);
    auto lv = assign_levels(fg);
    for (const auto& a : fg.arcs) o.require(lv[a.tail] < lv[a.head], "levels increase" + at);
  }
  if (o.pass) o.detail = std::to_string(ws.size()) + " generic directions";
  return o;
}

Outcome s2_parity_suite() {
  Outcome o;
  auto g = generate_octahedral();
  auto check_all = [&](const SurfaceComplex& c, const std::string& tag) {
    auto suite = run_sphere_suite(c);
    for (const auto& v : suite.verdicts) o.require(v.pass, tag + ": " + v.name + " " + v.detail);
    auto col = bicolor(c);
    o.require(col.count(Color::Black) == col.count(Color::White), tag + ": global balance");
    auto p = parity_theorem(c);
    o.require(p.N % 2 == 1 && p.V % 4 == 2 && p.F % 8 == 0, tag + ": N, V, F parities");
    for (Label i = 0; i < static_cast<Label>(c.num_loops()); ++i) {
      auto vp = vertex_parities(c, i);
      o.require(vp.on_loop % 4 == 0, tag + ": vertices on loop");
      for (int k : vp.side_vertices) o.require(k % 2 == 1, tag + ": side vertex count");
      for (const auto& reg : color_balance(c, col, i).regions)
        o.require(reg.black == reg.white, tag + ": side balance");
    }
    for (Label i = 0; i < static_cast<Label>(c.num_loops()); ++i)
      for (Label j = i + 1; j < static_cast<Label>(c.num_loops()); ++j) {
        std::vector<EyeRecord> es;
        try {
          es = eyes(c, i, j);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::DisjointLoops) continue;
          throw;
        }
        for (const auto& e : es) {
          if (!e.is_eye()) continue;
          o.require(e.lashes_i.size() % 2 == 1 && e.lashes_j.size() % 2 == 1, tag + ": eyelash parity");
          o.require(eye_checks(c, e, col).ok(), tag + ": eye checks");
        }
      }
  };
  check_all(g.complex, "octahedral");
  int complexes = 1;
  for (std::uint64_t seed = 0; seed <= 9; ++seed)
    for (int k = 1; k <= 3; ++k) {
      auto [c, f] = random_insertions(g.complex, g.fan, k, seed);
      check_all(c, "seed " + std::to_string(seed) + " k " + std::to_string(k));
      ++complexes;
    }
  if (o.pass) o.detail = std::to_string(complexes) + " complexes";
  return o;
}

Outcome surgery_laws() {
  Outcome o;
  auto g = generate_octahedral();
  for (int x = 0; x < static_cast<int>(g.complex.num_vertices()); ++x) {
    auto ins = insert_spheres(g.complex, g.fan, x);
    auto [c, f] = remove_spheres(ins.complex, ins.fan, ins.pair);
    o.require(c == g.complex && f == g.fan, "insert then remove at x=" + std::to_string(x));
  }
  for (int k = 1; k <= 4; ++k) {
    auto [c, f] = augment(g.complex, g.fan, k);
    o.require(static_cast<int>(c.num_faces()) == 8 + 8 * k, "F after augment " + std::to_string(k));
    o.require(static_cast<int>(c.num_loops()) == 3 + 2 * k, "N after augment " + std::to_string(k));
    o.require(fan_compatible(c, f).ok, "fan after augment " + std::to_string(k));
  }
  if (o.pass) o.detail = "identity at 6 vertices; F = 8+8k, N = 3+2k for k=1..4";
  return o;
}

Outcome examples_3d() {
  Outcome o;
  auto s = generate_s3();
  o.require(validate_complex3(s.complex).ok(), "S3 validation");
  o.require(s.fan == s3_fan(), "S3 fan");
  o.require(s.fan.at(0) == Vec{-1, 0, 0} && s.fan.at(1) == Vec{1, -1, 0} && s.fan.at(2) == Vec{1, 1, 0} &&
                s.fan.at(3) == Vec{1, 0, -1} && s.fan.at(4) == Vec{1, 0, 1},
            "stated fan vectors");
  o.require(fan_compatible(s.complex, s.fan).ok, "S3 fan compatibility");
  const int domains = static_cast<int>(s.complex.count(3));
  o.require(domains == 32, "S3 domain count");
  auto sets = vertex_label_sets(s.complex);
  auto sk = skeleton(s.complex);
  for (const auto& w : generic_directions(s.fan, sets, 10, 1, 20)) {
    auto c = index_counts(sk, s.fan, w).c;
    o.require(c == oracle::index_counts(s.complex, s.fan, w), "S3 index oracle");
    o.require(domains == c[3] * 8, "F = 8 c3 at w=" + to_string(w));
  }
  auto r = generate_rp3();
  o.require(2 * static_cast<int>(r.complex.count(3)) == domains, "RP3 domain count");
  o.require(validate_complex3(r.complex).ok(), "RP3 validation");
  o.require(fan_compatible(r.complex, r.fan).ok, "RP3 fan compatibility");
  o.require(r.complex.euler_characteristic() == 0, "RP3 euler characteristic");

  int with_cycles = 0;
  for (const auto& w : generic_directions(s.fan, sets, 100, 2, 30))
    if (!detect_cycles(orient_edges(sk, s.fan, w)).empty()) ++with_cycles;
  std::printf("  info: S3 cycle search: %d of 100 generic directions produced a cycle\n", with_cycles);
  if (o.pass) o.detail = "S3 32 domains, RP3 16 domains";
  return o;
}

Outcome realizability() {
  Outcome o;
  auto oct = generate_octahedral().complex;
  auto a = search_fan(oct);
  o.require(a.status == SearchStatus::Found && a.fan && fan_compatible(oct, *a.fan).ok, "octahedral");
  auto t = genus_complex(1, 8);
  auto b = search_fan(t);
  o.require(b.status == SearchStatus::Found && b.fan && fan_compatible(t, *b.fan).ok, "genus 1");
  for (const auto& c : {two_loops_crossing_twice(), insert_spheres_combinatorial(fixture::four_crossings(), 0)}) {
    bool digon = false;
    for (const auto& f : c.faces()) digon = digon || f.size() == 2;
    o.require(digon, "digon fixture");
    o.require(search_fan(c).status == SearchStatus::Infeasible, "digon complex infeasible");
  }
  if (o.pass) o.detail = "octahedral and genus 1 found and re-verified; digons infeasible";
  return o;
}

Outcome morse() {
  Outcome o;
  auto run = [&](const auto& c, const Fan& fan, const std::vector<int>& betti, const std::string& tag) {
    auto sets = vertex_label_sets(c);
    for (const auto& w : generic_directions(fan, sets, 5, 3, 15)) {
      auto counts = index_counts(skeleton(c), fan, w);
      auto rep = morse_inequalities(counts, betti);
      for (const auto& v : rep.verdicts) o.require(v.pass, tag + ": " + v.name + " " + v.detail);
      int alt = 0, balt = 0;
      for (std::size_t i = 0; i < betti.size(); ++i) {
        int s = (betti.size() - 1 - i) % 2 ? -1 : 1;
        alt += s * counts.c[i];
        balt += s * betti[i];
      }
      o.require(alt == balt, tag + ": equality at i = n");
    }
  };
  auto oct = generate_octahedral();
  run(oct.complex, oct.fan, {1, 0, 1}, "S2");
  auto s3 = generate_s3();
  run(s3.complex, s3.fan, {1, 0, 0, 1}, "S3");
  auto rp3 = generate_rp3();
  run(rp3.complex, rp3.fan, {1, 0, 0, 1}, "RP3");
  for (int g = 1; g <= 3; ++g) {
    auto gg = generate_genus_g(g, 8);
    run(gg.complex, gg.fan, {1, 2 * g, 1}, "genus " + std::to_string(g));
    o.require(static_cast<int>(gg.complex.num_vertices()) >= 2 * g + 2, "V >= 2g + 2");
  }
  if (o.pass) o.detail = "S2, T2, genus 2 and 3, S3, RP3";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 octahedral baseline", octahedral_baseline},
      {"2 flow law", flow_law},
      {"3 S2 parity suite", s2_parity_suite},
      {"4 surgery laws", surgery_laws},
      {"5 3D examples", examples_3d},
      {"6 realizability oracle", realizability},
      {"7 Morse inequalities", morse},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str());
    failures += !out.pass;
  }
  return failures == 0 ? 0 : 1;
}
