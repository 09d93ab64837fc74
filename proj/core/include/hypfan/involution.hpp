#pragma once

// Free involutions and the quotients they induce.

#include <array>
#include <vector>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

/// Involution of a surface complex, given on darts. It must carry each
/// vertex rotation onto a vertex rotation (possibly reversed) and edges onto
/// edges.
struct DartInvolution {
  std::vector<DartId> map;
};

/// Involution of a 3D complex, one permutation per dimension.
struct CellInvolution {
  std::array<std::vector<int>, 4> map;
};

/// Orbit complex. Representatives are the smaller id of each orbit, and
/// orbits are numbered in the order of their representatives. Throws
/// NotInvolutive, NotFree or NotIncidencePreserving.
SurfaceComplex quotient_by_involution(const SurfaceComplex& c, const DartInvolution& s);
CellComplex3 quotient_by_involution(const CellComplex3& c, const CellInvolution& s);

}  // namespace hypfan
