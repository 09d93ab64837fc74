#include <gtest/gtest.h>

#include <random>

#include "hypfan/error.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/flow.hpp"
#include "oracles.hpp"

using namespace hypfan;

namespace {

FlowGraph synthetic(int nodes, const std::vector<std::pair<int, int>>& arcs) {
  FlowGraph g;
  g.n = 2;
  for (int v = 0; v < nodes; ++v) g.nodes.push_back({v, {}, {}, 0});
  int e = 0;
  for (auto [t, h] : arcs) g.arcs.push_back({e++, t, h});
  return g;
}

int find_vertex(const SurfaceComplex& c, Label a, Label b) {
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    auto ls = c.vertex_labels(static_cast<int>(v));
    if (std::min(ls[0], ls[1]) == a && std::max(ls[0], ls[1]) == b) return static_cast<int>(v);
  }
  return -1;
}

std::vector<Vec> generic_directions(const Fan& fan, const std::vector<std::vector<Label>>& sets, int count,
                                    unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    Vec w;
    for (int i = 0; i < fan.dimension(); ++i) w.emplace_back(d(rng));
    if (is_zero(w) || !is_generic(w, fan, sets).generic) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST(Flow, OctahedralVertexIndex) {
  auto o = generate_octahedral();
  auto s = skeleton(o.complex);
  int v = find_vertex(o.complex, 0, 1);
  ASSERT_GE(v, 0);
  auto vi = vertex_index(s, v, o.fan, Vec{2, 1});
  EXPECT_EQ(vi.alpha, (Vec{2, 1}));
  EXPECT_EQ(vi.index, 2);
  EXPECT_EQ(vertex_index(s, v, o.fan, Vec{-2, -1}).index, 0);
  int v02 = find_vertex(o.complex, 0, 2), v12 = find_vertex(o.complex, 1, 2);
  EXPECT_EQ(vertex_index(s, v02, o.fan, Vec{2, 1}).alpha, (Vec{1, -1}));
  EXPECT_EQ(vertex_index(s, v12, o.fan, Vec{2, 1}).alpha, (Vec{-1, -2}));
}

TEST(Flow, OctahedralCounts) {
  auto o = generate_octahedral();
  auto s = skeleton(o.complex);
  EXPECT_EQ(index_counts(s, o.fan, Vec{2, 1}).c, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(oracle::index_counts(o.complex, o.fan, Vec{2, 1}), (std::vector<int>{2, 2, 2}));
}

TEST(Flow, NonGenericRejected) {
  auto o = generate_octahedral();
  try {
    Direction d(Vec{1, 0}, o.fan, vertex_label_sets(o.complex));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericDirection);
  }
}

TEST(Flow, CountsMatchOracleAndLaws2D) {
  auto o = generate_octahedral();
  auto s = skeleton(o.complex);
  for (const auto& w : generic_directions(o.fan, vertex_label_sets(o.complex), 30, 1)) {
    auto c = index_counts(s, o.fan, w).c;
    EXPECT_EQ(c, oracle::index_counts(o.complex, o.fan, w));
    EXPECT_EQ(c[0], c[2]);
    EXPECT_EQ(c[0] - c[1] + c[2], 2);
    EXPECT_EQ(static_cast<int>(o.complex.num_faces()), 4 * c[2]);
  }
}

TEST(Flow, OrientationReversesWithW) {
  auto o = generate_octahedral();
  auto s = skeleton(o.complex);
  auto g = orient_edges(s, o.fan, Vec{2, 1});
  auto h = orient_edges(s, o.fan, Vec{-2, -1});
  ASSERT_EQ(g.arcs.size(), 12u);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    EXPECT_EQ(g.arcs[i].tail, h.arcs[i].head);
    EXPECT_EQ(g.arcs[i].head, h.arcs[i].tail);
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) EXPECT_EQ(g.nodes[v].index, 2 - h.nodes[v].index);
}

TEST(Flow, ArcsPointTowardHigherIndexEnds) {
  auto o = generate_octahedral();
  auto g = orient_edges(skeleton(o.complex), o.fan, Vec{2, 1});
  for (const auto& a : g.arcs) EXPECT_LT(g.nodes[a.tail].index, g.nodes[a.head].index);
}

TEST(Flow, SaddlesHaveInAndOutArcs) {
  auto o = generate_octahedral();
  for (const auto& w : generic_directions(o.fan, vertex_label_sets(o.complex), 10, 2)) {
    auto g = orient_edges(skeleton(o.complex), o.fan, w);
    for (const auto& n : g.nodes) {
      if (n.index == 0 || n.index == 2) continue;
      int in = 0, out = 0;
      for (const auto& a : g.arcs) {
        in += a.head == n.vertex;
        out += a.tail == n.vertex;
      }
      EXPECT_GT(in, 0);
      EXPECT_GT(out, 0);
    }
  }
}

TEST(Flow, CyclesAndLevelsOnSyntheticGraphs) {
  auto tri = synthetic(3, {{0, 1}, {1, 2}, {2, 0}});
  auto cycles = detect_cycles(tri);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].size(), 3u);
  EXPECT_THROW(assign_levels(tri), Error);

  EXPECT_EQ(assign_levels(synthetic(1, {})), std::vector<int>{0});
  auto chain = synthetic(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(detect_cycles(chain).empty());
  EXPECT_EQ(assign_levels(chain), (std::vector<int>{0, 1, 2, 3}));
}

TEST(Flow, OctahedralLevels) {
  auto o = generate_octahedral();
  auto g = orient_edges(skeleton(o.complex), o.fan, Vec{2, 1});
  EXPECT_TRUE(detect_cycles(g).empty());
  auto lv = assign_levels(g);
  int top = *std::max_element(lv.begin(), lv.end());
  for (const auto& a : g.arcs) EXPECT_LT(lv[a.tail], lv[a.head]);
  for (const auto& n : g.nodes) {
    if (n.index == 0) {
      EXPECT_EQ(lv[n.vertex], 0);
    }
    if (n.index == 2) {
      EXPECT_EQ(lv[n.vertex], top);
    }
  }
}

TEST(Flow, DomainCountAndJigsaw) {
  auto o = generate_octahedral();
  auto r = check_domain_count(skeleton(o.complex), o.fan, Vec{2, 1});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.domains, 8);
  EXPECT_EQ(r.attractors, 2);
  for (const auto& [v, ds] : r.jigsaw) EXPECT_EQ(ds.size(), 4u);
}

TEST(Flow, PairDecomposition) {
  auto o = generate_octahedral();
  auto r = attractor_pair_decomposition_s2(o.complex, o.fan, Vec{2, 1});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.total, 2);
  ASSERT_EQ(r.contributing.size(), 1u);
  EXPECT_EQ(r.contributing[0][0], 0);
  EXPECT_EQ(r.contributing[0][1], 1);
  EXPECT_EQ(r.contributing[0][2], 2);
  auto other = attractor_pair_decomposition_s2(o.complex, o.fan, Vec{-1, 3});
  EXPECT_TRUE(other.ok());
  EXPECT_EQ(other.total, 2);
}

TEST(Flow, S3CountsMatchOracle) {
  auto s = generate_s3();
  auto sk = skeleton(s.complex);
  for (const auto& w : generic_directions(s.fan, vertex_label_sets(s.complex), 10, 3)) {
    auto c = index_counts(sk, s.fan, w).c;
    EXPECT_EQ(c, oracle::index_counts(s.complex, s.fan, w));
    EXPECT_EQ(c[0], c[3]);
    EXPECT_EQ(c[0] - c[1] + c[2] - c[3], 0);
    EXPECT_EQ(32, 8 * c[3]);
    EXPECT_TRUE(check_domain_count(sk, s.fan, w).ok());
  }
}

TEST(Flow, S3CornerSolve) {
  auto s = generate_s3();
  auto sk = skeleton(s.complex);
  for (std::size_t v = 0; v < s.complex.count(0); ++v) {
    auto ls = s.complex.labels_at(0, static_cast<int>(v));
    if (ls != std::vector<Label>{0, 1, 3}) continue;
    auto vi = vertex_index(sk, static_cast<int>(v), s.fan, Vec{3, 1, 1});
    EXPECT_EQ(vi.alpha, oracle::cramer({s.fan.at(0), s.fan.at(1), s.fan.at(3)}, Vec{3, 1, 1}));
    EXPECT_GE(vi.index, 0);
    EXPECT_LE(vi.index, 3);
    return;
  }
  FAIL() << "no corner on labels 0, 1, 3";
}

TEST(Flow, MorseInequalities) {
  EXPECT_TRUE(morse_inequalities({{2, 2, 2}}, {1, 0, 1}).ok());
  EXPECT_TRUE(morse_inequalities({{1, 0, 1}}, {1, 0, 1}).ok());
  EXPECT_FALSE(morse_inequalities({{1, 1, 1}}, {1, 0, 1}).ok());
  EXPECT_TRUE(morse_inequalities({{4, 8, 8, 4}}, {1, 0, 0, 1}).ok());
}

TEST(Flow, GenusOneBound) {
  auto g = generate_genus_g(1, 8);
  auto sets = vertex_label_sets(g.complex);
  for (const auto& w : generic_directions(g.fan, sets, 5, 4)) {
    auto c = index_counts(skeleton(g.complex), g.fan, w);
    auto r = morse_inequalities(c, {1, 2, 1});
    EXPECT_TRUE(r.ok());
  }
  EXPECT_GE(g.complex.num_vertices(), 4u);
}
