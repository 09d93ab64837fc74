#include <gtest/gtest.h>

#include "hypfan/error.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/moves.hpp"
#include "hypfan/sphere2.hpp"
#include "fixtures.hpp"

using namespace hypfan;

namespace {

// Faces adjacent across each edge get different colours.
bool proper(const SurfaceComplex& c, const FaceColoring& col) {
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    auto f = c.edge_faces(static_cast<EdgeId>(e));
    if (col.color[f[0]] == col.color[f[1]]) return false;
  }
  return true;
}

}  // namespace

TEST(Sphere2, OctahedralColouring) {
  auto c = generate_octahedral().complex;
  auto col = bicolor(c);
  EXPECT_TRUE(proper(c, col));
  EXPECT_EQ(col.count(Color::Black), 4);
  EXPECT_EQ(col.count(Color::White), 4);
}

TEST(Sphere2, ColouringNeedsSphere) {
  auto t = genus_complex(1, 8);
  try {
    bicolor(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnSphere);
  }
}

TEST(Sphere2, BalanceOnSidesOfEveryLoop) {
  auto c = generate_octahedral().complex;
  auto col = bicolor(c);
  EXPECT_TRUE(color_balance(c, col).ok());
  for (Label i = 0; i < 3; ++i) {
    auto r = color_balance(c, col, i);
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.regions.size(), 2u);
    for (const auto& reg : r.regions) {
      EXPECT_EQ(reg.black, 2);
      EXPECT_EQ(reg.white, 2);
    }
  }
}

TEST(Sphere2, OctahedralEyes) {
  auto c = generate_octahedral().complex;
  auto col = bicolor(c);
  auto es = eyes(c, 0, 1);
  ASSERT_EQ(es.size(), 4u);
  for (const auto& e : es) {
    EXPECT_TRUE(e.is_eye());
    EXPECT_EQ(e.lashes_i.size(), 1u);
    EXPECT_EQ(e.lashes_j.size(), 1u);
    EXPECT_TRUE(eye_checks(c, e, col).ok());
  }
}

TEST(Sphere2, TwoLoopsCrossingTwiceHaveBareEyes) {
  auto c = two_loops_crossing_twice();
  auto col = bicolor(c);
  auto es = eyes(c, 0, 1);
  ASSERT_EQ(es.size(), 4u);
  for (const auto& e : es) {
    EXPECT_TRUE(e.is_eye());
    EXPECT_TRUE(e.lashes_i.empty());
    EXPECT_FALSE(eye_checks(c, e, col).ok());
  }
}

TEST(Sphere2, FourCrossingsGiveRawComponents) {
  auto c = fixture::four_crossings();
  EXPECT_EQ(c.num_loops(), 2u);
  auto es = eyes(c, 0, 1);
  int raw = 0, real = 0;
  for (const auto& e : es) (e.is_eye() ? real : raw)++;
  EXPECT_EQ(raw, 2);
  EXPECT_EQ(real, 4);
}

TEST(Sphere2, DisjointLoops) {
  // After an insertion the two new loops do not meet.
  auto o = generate_octahedral();
  auto c = insert_spheres_combinatorial(o.complex, 0);
  try {
    eyes(c, 3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisjointLoops);
  }
}

TEST(Sphere2, VertexParities) {
  auto c = generate_octahedral().complex;
  for (Label i = 0; i < 3; ++i) {
    auto r = vertex_parities(c, i);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.on_loop, 4);
    EXPECT_EQ(r.side_vertices, (std::vector<int>{1, 1}));
  }
  auto two = two_loops_crossing_twice();
  EXPECT_FALSE(vertex_parities(two, 0).ok());
}

TEST(Sphere2, ParityTheorem) {
  auto c = generate_octahedral().complex;
  auto r = parity_theorem(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.N, 3);
  EXPECT_EQ(r.V, 6);
  EXPECT_EQ(r.F, 8);
  auto after = parity_theorem(insert_spheres_combinatorial(c, 2));
  EXPECT_TRUE(after.ok());
  EXPECT_EQ(after.N, 5);
  EXPECT_EQ(after.V, 14);
  EXPECT_EQ(after.F, 16);
  EXPECT_FALSE(parity_theorem(two_loops_crossing_twice()).ok());
}

TEST(Sphere2, CornerPairing) {
  auto c = generate_octahedral().complex;
  auto p = corner_pairing(c);
  ASSERT_TRUE(p.found);
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(p.pairs.size(), 3u);
  std::vector<bool> used(6, false);
  for (auto [a, b] : p.pairs) {
    EXPECT_FALSE(used[a]);
    EXPECT_FALSE(used[b]);
    used[a] = used[b] = true;
  }
  for (int k : p.separated_pairs) EXPECT_EQ(k % 2, 1);
  for (int k : p.separating_loops) EXPECT_EQ(k % 2, 1);
}

TEST(Sphere2, SuiteAfterRandomInsertions) {
  auto o = generate_octahedral();
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto [c, f] = random_insertions(o.complex, o.fan, 2, seed);
    EXPECT_TRUE(run_sphere_suite(c).ok()) << seed;
  }
}
