#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "hypfan/error.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/involution.hpp"
#include "hypfan/moves.hpp"
#include "oracles.hpp"

using namespace hypfan;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(SurfaceComplex, OctahedralCounts) {
  auto c = generate_octahedral().complex;
  EXPECT_EQ(c.num_vertices(), 6u);
  EXPECT_EQ(c.num_edges(), 12u);
  EXPECT_EQ(c.num_edges(), 2 * c.num_vertices());
  EXPECT_EQ(static_cast<int>(c.num_faces()), oracle::face_count(c.input()));
  EXPECT_EQ(c.num_faces(), 8u);
  EXPECT_EQ(c.euler_characteristic(), 2);
}

TEST(SurfaceComplex, OctahedralLoops) {
  auto c = generate_octahedral().complex;
  ASSERT_EQ(c.num_loops(), 3u);
  EXPECT_EQ(oracle::strand_lengths(c.input()), (std::vector<int>{4, 4, 4}));
  std::set<EdgeId> seen;
  for (const auto& l : c.loops()) {
    EXPECT_EQ(l.edges.size(), 4u);
    for (EdgeId e : l.edges) EXPECT_TRUE(seen.insert(e).second);
  }
  EXPECT_EQ(seen.size(), c.num_edges());
}

TEST(SurfaceComplex, ThroughStrandUsesOppositeSlots) {
  auto c = generate_octahedral().complex;
  for (const auto& l : c.loops())
    for (EdgeId e : l.edges)
      for (DartId d : c.edge_darts(e)) EXPECT_EQ(c.edge_label(c.dart_edge(c.opposite(d))), l.id);
}

TEST(SurfaceComplex, FaceWalksPartitionDarts) {
  auto c = generate_octahedral().complex;
  std::size_t total = 0;
  for (const auto& f : c.faces()) total += f.size();
  EXPECT_EQ(total, 2 * c.num_edges());
}

TEST(SurfaceComplex, RejectsEmpty) {
  EXPECT_EQ(code_of([] { SurfaceComplex::build({}); }), ErrorCode::EmptyComplex);
}

TEST(SurfaceComplex, RejectsDanglingAndSelfPairedDarts) {
  SurfaceInput in = generate_octahedral().complex.input();
  SurfaceInput missing = in;
  missing.edges.pop_back();
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(missing); }), ErrorCode::DanglingDart);
  SurfaceInput out_of_range = in;
  out_of_range.edges[0][0] = 999;
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(out_of_range); }), ErrorCode::DanglingDart);
  SurfaceInput self = in;
  self.edges[0][1] = self.edges[0][0];
  ErrorCode code = code_of([&] { SurfaceComplex::build(self); });
  EXPECT_TRUE(code == ErrorCode::SelfPairedDart || code == ErrorCode::DanglingDart);
}

TEST(SurfaceComplex, RejectsDeclaredSurfaceMismatch) {
  SurfaceInput in = generate_octahedral().complex.input();
  in.surface = Surface{true, 1};
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(in); }), ErrorCode::SurfaceMismatch);
}

TEST(SurfaceComplex, GenusEightVariant) {
  for (int g = 1; g <= 4; ++g) {
    auto c = genus_complex(g, 8);
    EXPECT_EQ(c.num_faces(), 8u) << g;
    EXPECT_EQ(static_cast<int>(c.num_faces()), oracle::face_count(c.input()));
    EXPECT_EQ(c.euler_characteristic(), 2 - 2 * g);
    EXPECT_EQ(static_cast<int>(c.num_vertices()), 6 + 2 * g);
    EXPECT_EQ(c.num_edges(), 2 * c.num_vertices());
    for (const auto& f : c.faces()) EXPECT_EQ(static_cast<int>(f.size()), g + 3);
  }
  auto t = genus_complex(1, 8);
  EXPECT_EQ(t.num_vertices(), 8u);
  EXPECT_EQ(t.num_edges(), 16u);
}

TEST(SurfaceComplex, SixteenVariantQuotient) {
  DartInvolution sigma;
  auto c = genus_complex(1, 16, &sigma);
  EXPECT_EQ(c.num_faces(), 16u);
  auto q = quotient_by_involution(c, sigma);
  EXPECT_EQ(q.num_faces(), 8u);
  EXPECT_EQ(q.num_vertices() * 2, c.num_vertices());
  EXPECT_EQ(q.num_edges() * 2, c.num_edges());
  EXPECT_FALSE(q.surface().orientable);
  EXPECT_EQ(q.euler_characteristic(), 0);
}

TEST(SurfaceComplex, QuotientErrors) {
  auto c = generate_octahedral().complex;
  DartInvolution id;
  for (std::size_t d = 0; d < c.num_darts(); ++d) id.map.push_back(static_cast<DartId>(d));
  EXPECT_EQ(code_of([&] { quotient_by_involution(c, id); }), ErrorCode::NotFree);
  DartInvolution shift;
  for (std::size_t d = 0; d < c.num_darts(); ++d) shift.map.push_back(static_cast<DartId>((d + 4) % c.num_darts()));
  EXPECT_EQ(code_of([&] { quotient_by_involution(c, shift); }), ErrorCode::NotInvolutive);
}

TEST(SurfaceComplex, InsertionAddsTwoLoops) {
  auto o = generate_octahedral();
  auto c = insert_spheres_combinatorial(o.complex, 0);
  EXPECT_EQ(c.num_loops(), 5u);
  EXPECT_EQ(c.num_vertices(), 14u);
  EXPECT_EQ(c.num_faces(), 16u);
  EXPECT_EQ(static_cast<int>(c.num_faces()), oracle::face_count(c.input()));
}

TEST(SurfaceComplex, EdgeFacesAreDistinctOnOctahedron) {
  auto c = generate_octahedral().complex;
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    auto f = c.edge_faces(static_cast<EdgeId>(e));
    EXPECT_NE(f[0], f[1]);
  }
  EXPECT_TRUE(c.self_loop_edges().empty());
}
