#pragma once

// Surgery: inserting and removing a pair of concentric spheres around a fixed
// point, iterated augmentation, and replayable move scripts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/fan.hpp"
#include "hypfan/involution.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

struct SpherePair {
  Label inner = 0;  // S, carries w
  Label outer = 0;  // S', carries w'
  int x = 0;
  Vec w;
  Vec w_prime;
};

/// Sphere insertion on a surface without any fan: new vertices and edges are
/// appended, the old edge at each dart of x keeps its id as the outermost
/// piece. The inner loop gets label N, the outer one N + 1.
SurfaceComplex insert_spheres_combinatorial(const SurfaceComplex& c, VertexId x);

/// Inverse of insert_spheres_combinatorial. Throws NotASpherePair or
/// WouldCreateDegenerateDomain.
SurfaceComplex remove_spheres_combinatorial(const SurfaceComplex& c, Label inner, Label outer);

struct Insertion2 {
  SurfaceComplex complex;
  Fan fan;
  SpherePair pair;
};

/// Without w_prime, w' is the sum of the two vectors at x, and w = -w' moved
/// off any existing direction by adding a small multiple of the vector with
/// the larger label. Throws NotAVertex, VectorOutsideCorner, IncompatibleInput.
Insertion2 insert_spheres(const SurfaceComplex& c, const Fan& fan, VertexId x,
                          const std::optional<Vec>& w_prime = std::nullopt);

/// Removes the pair and relabels the remaining loops canonically; the fan
/// follows the relabelling.
std::pair<SurfaceComplex, Fan> remove_spheres(const SurfaceComplex& c, const Fan& fan, const SpherePair& pair);

struct Insertion3 {
  CellComplex3 complex;
  Fan fan;
  SpherePair pair;
};

/// 3D version: 12 new 0-cells, 36 1-cells, 40 2-cells and 16 3-cells. Old
/// cells keep their ids as the outer pieces. New labels are max + 1 (inner)
/// and max + 2 (outer).
Insertion3 insert_spheres(const CellComplex3& c, const Fan& fan, int x, const std::optional<Vec>& w_prime = std::nullopt);

std::pair<CellComplex3, Fan> remove_spheres(const CellComplex3& c, const Fan& fan, const SpherePair& pair);

/// k insertions, always at vertex 0.
std::pair<SurfaceComplex, Fan> augment(const SurfaceComplex& c, const Fan& fan, int k);
std::pair<CellComplex3, Fan> augment(const CellComplex3& c, const Fan& fan, int k);

/// `count` insertions at vertices drawn from a seeded generator.
std::pair<SurfaceComplex, Fan> random_insertions(const SurfaceComplex& c, const Fan& fan, int count,
                                                 std::uint64_t seed);

/// A complex of either dimension with its fan and an optional involution.
struct State {
  std::variant<SurfaceComplex, CellComplex3> complex;
  Fan fan;
  std::optional<DartInvolution> involution2;
  std::optional<CellInvolution> involution3;
  /// Sphere pairs inserted so far, most recent last.
  std::vector<SpherePair> pairs;
};

struct MoveOp {
  std::string op;
  std::map<std::string, std::string> args;
};

using MoveScript = std::vector<MoveOp>;

/// Ops: generate {kind, g, variant}, insert_spheres {x, w_prime},
/// remove_spheres {inner, outer} (default: the last inserted pair),
/// augment {k}, random_insertions {count, seed}, quotient.
State apply_move(State state, const MoveOp& op);
State replay(const MoveScript& script, std::optional<State> initial = std::nullopt);

}  // namespace hypfan
