#pragma once

#include <vector>

#include "hypfan/generators.hpp"
#include "hypfan/surface_complex.hpp"

namespace fixture {

// A circle and an ellipse crossing at p, q, r, s (vertices 0..3 in that order).
// Four of the six faces are digons.
inline hypfan::SurfaceComplex four_crossings() {
  using hypfan::FaceStep;
  std::vector<std::vector<FaceStep>> faces = {
      {{"p", "B1"}, {"q", "A2"}, {"r", "B3"}, {"s", "A4"}},
      {{"q", "B1"}, {"p", "A1"}},
      {{"r", "A2"}, {"q", "B2"}},
      {{"s", "B3"}, {"r", "A3"}},
      {{"p", "A4"}, {"s", "B4"}},
      {{"q", "A1"}, {"p", "B4"}, {"s", "A3"}, {"r", "B2"}},
  };
  return hypfan::SurfaceComplex::build(hypfan::surface_from_faces(faces).input);
}

}  // namespace fixture
