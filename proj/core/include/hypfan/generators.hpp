#pragma once

// Example families: the octahedral sphere, genus-g surfaces cut by the three
// coordinate planes (optionally by two more planes, for non-orientable
// quotients), the 3-sphere split into 32 prisms, and its projective quotient.

#include <optional>
#include <string>
#include <vector>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/fan.hpp"
#include "hypfan/involution.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

/// One corner of an oriented polygon: the vertex name, and a tag telling
/// apart parallel edges from this vertex to the next.
struct FaceStep {
  std::string vertex;
  std::string edge_tag;
};

struct NamedSurface {
  SurfaceInput input;
  std::vector<std::string> vertex_names;
  /// "u|v|tag" with u < v, one per edge.
  std::vector<std::string> edge_keys;
};

/// Glues coherently oriented polygons into a rotation system. Vertices and
/// edges are numbered by first appearance; edge e has dart 2e at the vertex
/// it is first left from. Throws MalformedInput on inconsistent gluing.
NamedSurface surface_from_faces(const std::vector<std::vector<FaceStep>>& faces);

struct Generated2 {
  SurfaceComplex complex;
  Fan fan;
  std::optional<DartInvolution> involution;
};

struct Generated3 {
  CellComplex3 complex;
  Fan fan;
  std::optional<CellInvolution> involution;
};

Generated2 generate_octahedral();

/// Combinatorics of the genus-g surface. variant 8 cuts along the three
/// coordinate planes; variant 16 adds the planes x = a and x = -a and fills
/// `sigma` with the antipodal involution.
SurfaceComplex genus_complex(int g, int variant, DartInvolution* sigma = nullptr);

/// genus_complex plus a fan from search. Throws FanSearchFailed.
Generated2 generate_genus_g(int g, int variant, std::uint64_t budget = 1000000);

/// Quotient of the sixteen-domain surface by its involution, with a searched
/// fan.
Generated2 generate_nonorientable(int g, std::uint64_t budget = 1000000);

Fan s3_fan();
/// Includes the antipodal involution.
Generated3 generate_s3();
Generated3 generate_rp3();

/// Two loops meeting in exactly two points: four digon faces on the sphere.
SurfaceComplex two_loops_crossing_twice();

}  // namespace hypfan
