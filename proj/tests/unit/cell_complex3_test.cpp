#include <gtest/gtest.h>

#include <set>

#include "hypfan/error.hpp"
#include "hypfan/generators.hpp"
#include "hypfan/involution.hpp"

using namespace hypfan;

TEST(CellComplex3, S3CellCounts) {
  auto s = generate_s3();
  const auto& c = s.complex;
  EXPECT_EQ(c.count(0), 24u);
  EXPECT_EQ(c.count(1), 72u);
  EXPECT_EQ(c.count(2), 80u);
  EXPECT_EQ(c.count(3), 32u);
  EXPECT_EQ(c.euler_characteristic(), 0);
  auto r = validate_complex3(c);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.findings.empty());
}

TEST(CellComplex3, S3DomainsAreFivefacetPrisms) {
  auto c = generate_s3().complex;
  std::size_t corners = 0;
  for (std::size_t d = 0; d < c.count(3); ++d) {
    EXPECT_EQ(c.boundary(3, static_cast<int>(d)).size(), 5u);
    auto vs = c.vertices_of(3, static_cast<int>(d));
    EXPECT_EQ(vs.size(), 6u);
    corners += vs.size();
  }
  EXPECT_EQ(corners, 8 * c.count(0));
}

TEST(CellComplex3, EveryVertexOnThreeLabels) {
  auto c = generate_s3().complex;
  for (std::size_t v = 0; v < c.count(0); ++v) {
    auto ls = c.labels_at(0, static_cast<int>(v));
    EXPECT_EQ(std::set<Label>(ls.begin(), ls.end()).size(), 3u);
  }
}

TEST(CellComplex3, Rp3IsHalf) {
  auto s = generate_s3();
  auto r = generate_rp3();
  for (int d = 0; d < 4; ++d) EXPECT_EQ(2 * r.complex.count(d), s.complex.count(d)) << d;
  EXPECT_EQ(r.complex.count(3), 16u);
  EXPECT_EQ(r.complex.euler_characteristic(), 0);
  EXPECT_TRUE(validate_complex3(r.complex).ok());
  EXPECT_EQ(r.fan, s.fan);
}

TEST(CellComplex3, AntipodalQuotientMatchesGenerator) {
  auto s = generate_s3();
  ASSERT_TRUE(s.involution);
  EXPECT_EQ(quotient_by_involution(s.complex, *s.involution), generate_rp3().complex);
}

TEST(CellComplex3, IdentityIsNotFree) {
  auto c = generate_s3().complex;
  CellInvolution id;
  for (int d = 0; d < 4; ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) id.map[d].push_back(static_cast<int>(i));
  try {
    quotient_by_involution(c, id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFree);
  }
}

TEST(CellComplex3, CorankViolation) {
  auto c = generate_s3().complex;
  auto labels = c.hypersurfaces();
  // Merge two hypersurfaces: their common vertices now see only two labels.
  for (auto& l : labels)
    if (l == 4) l = 3;
  CellComplex3 bad(c.cells(), labels);
  EXPECT_TRUE(validate_complex3(bad).has("VertexCorankViolation"));
  EXPECT_FALSE(validate_complex3(bad).ok());
}

TEST(CellComplex3, DanglingReferenceAndEmpty) {
  EXPECT_TRUE(validate_complex3(CellComplex3()).has("EmptyComplex"));
  auto c = generate_s3().complex;
  auto cells = c.cells();
  cells[2][0][0] = 10000;
  EXPECT_TRUE(validate_complex3(CellComplex3(cells, c.hypersurfaces())).has("DanglingReference"));
}

TEST(CellComplex3, SelfLoopEdgeIsFlaggedOnly) {
  // Finding is recorded but does not make the report fail by itself.
  ValidationReport r;
  r.findings.push_back({"SelfLoopEdge", 1, {0}, ""});
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.has("SelfLoopEdge"));
}
