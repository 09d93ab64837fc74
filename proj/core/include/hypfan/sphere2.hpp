#pragma once

// Checks specific to loop arrangements on the 2-sphere: checkerboard
// colouring, colour balance, eyes and eyelashes, vertex parities, the N/V/F
// parity theorem and its corner-pairing witness.

#include <array>
#include <cstdint>
#include <vector>

#include "hypfan/report.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

enum class Color { Black, White };

struct FaceColoring {
  std::vector<Color> color;
  int count(Color c) const;
};

/// Breadth-first 2-colouring of the face adjacency graph from face 0 (black).
/// Throws NotOnSphere or NotBipartite.
FaceColoring bicolor(const SurfaceComplex& c);

/// Connected components of the surface minus the given loops, as sorted face
/// lists ordered by their smallest face.
std::vector<std::vector<FaceId>> complement_components(const SurfaceComplex& c, const std::vector<Label>& loops);

struct RegionBalance {
  std::vector<FaceId> faces;
  int black = 0;
  int white = 0;
};

struct BalanceReport {
  std::vector<RegionBalance> regions;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

BalanceReport color_balance(const SurfaceComplex& c, const FaceColoring& coloring);
/// Balance on each side of loop i.
BalanceReport color_balance(const SurfaceComplex& c, const FaceColoring& coloring, Label loop);

/// One component of the complement of two loops. It is an eye when it has
/// exactly two corners; otherwise it is kept raw.
struct EyeRecord {
  Label i = 0;
  Label j = 0;
  std::vector<FaceId> faces;
  std::vector<VertexId> corners;
  std::vector<VertexId> lashes_i;
  std::vector<VertexId> lashes_j;
  bool is_eye() const { return corners.size() == 2; }
};

/// Throws NotOnSphere or DisjointLoops.
std::vector<EyeRecord> eyes(const SurfaceComplex& c, Label i, Label j);

struct EyeCheckReport {
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

EyeCheckReport eye_checks(const SurfaceComplex& c, const EyeRecord& eye, const FaceColoring& coloring);

struct VertexParityReport {
  int on_loop = 0;
  std::vector<int> side_vertices;
  std::vector<int> side_edges;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

VertexParityReport vertex_parities(const SurfaceComplex& c, Label loop);

struct ParityReport {
  int N = 0, V = 0, F = 0;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

ParityReport parity_theorem(const SurfaceComplex& c);

struct CornerPairing {
  bool found = false;
  std::vector<std::array<VertexId, 2>> pairs;
  std::vector<std::array<Label, 2>> witness;
  /// |P_i| per loop and |L(p)| per pair.
  std::vector<int> separated_pairs;
  std::vector<int> separating_loops;
  std::uint64_t nodes = 0;
  std::vector<Verdict> verdicts;
  bool ok() const { return found && all_pass(verdicts); }
};

CornerPairing corner_pairing(const SurfaceComplex& c, std::uint64_t budget = 1000000);

/// Everything above on every loop, loop pair and eye.
struct SphereSuiteReport {
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

SphereSuiteReport run_sphere_suite(const SurfaceComplex& c);

}  // namespace hypfan
