#pragma once

// DOT and SVG renderings. Output depends only on the inputs: nodes and edges
// are written in id order.

#include <string>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/flow.hpp"
#include "hypfan/sphere2.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

/// Vertices as nodes, edges labelled by loop. With a flow the graph becomes a
/// digraph with one arc per edge (tail -> head) and index annotations; with a
/// colouring every face is added as a filled node.
std::string export_dot(const SurfaceComplex& c, const FlowGraph* flow = nullptr,
                       const FaceColoring* coloring = nullptr);

/// 1-skeleton of a 3D complex, labelled by the hypersurfaces through each 0-cell.
std::string export_dot(const CellComplex3& c, const FlowGraph* flow = nullptr);

/// Vertices on a circle, edges as straight segments coloured per loop.
std::string export_svg(const SurfaceComplex& c);

}  // namespace hypfan
