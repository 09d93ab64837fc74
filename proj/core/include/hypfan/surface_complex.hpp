#pragma once

// Combinatorial maps for 2D orbit decompositions.
//
// A SurfaceComplex is a 4-valent graph embedded in a closed surface, given by
// a rotation system: each vertex lists its four darts in cyclic order, each
// edge pairs two darts. An optional per-edge twist flag turns the rotation
// system into a signed one, so non-orientable surfaces are representable.
//
// Faces are traced on flags (dart, side). Loops follow the through-strand
// rule: a strand entering a vertex at slot p leaves it at slot p + 2 mod 4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypfan {

using DartId = int;
using VertexId = int;
using EdgeId = int;
using FaceId = int;
using Label = int;

struct Surface {
  bool orientable = true;
  /// Genus for orientable surfaces, number of crosscaps otherwise.
  int genus_or_crosscaps = 0;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
  }
  bool operator==(const Surface&) const = default;
};

std::string to_string(const Surface& s);

/// Raw constructor input; mirrors the JSON text format.
struct SurfaceInput {
  std::vector<std::array<DartId, 4>> vertices;
  std::vector<std::array<DartId, 2>> edges;
  /// Empty means no twisted edges; otherwise one flag per edge.
  std::vector<bool> twisted;
  std::optional<Surface> surface;

  bool operator==(const SurfaceInput&) const = default;
};

struct Face {
  /// Dart leaving each corner, in walk order.
  std::vector<DartId> darts;
  std::vector<EdgeId> edges;
  std::vector<VertexId> corners;
  /// Loop label of each boundary edge, in walk order.
  std::vector<Label> labels;

  std::size_t size() const { return edges.size(); }
};

struct Loop {
  Label id = 0;
  /// Darts through which the loop leaves a vertex, one per traversed edge.
  std::vector<DartId> darts;
  std::vector<EdgeId> edges;
  /// Vertices in traversal order; a self-crossing loop lists a vertex twice.
  std::vector<VertexId> vertices;
};

class SurfaceComplex {
 public:
  /// Validates and derives faces and loops. Throws Error with one of
  /// EmptyComplex, DanglingDart, NonQuadrivalentVertex, SelfPairedDart,
  /// Disconnected, NonDiskFace, SurfaceMismatch.
  static SurfaceComplex build(SurfaceInput input);

  std::size_t num_vertices() const { return input_.vertices.size(); }
  std::size_t num_edges() const { return input_.edges.size(); }
  std::size_t num_darts() const { return dart_vertex_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_loops() const { return loops_.size(); }

  const std::array<DartId, 4>& rotation(VertexId v) const { return input_.vertices.at(v); }
  VertexId dart_vertex(DartId d) const { return dart_vertex_.at(d); }
  int dart_slot(DartId d) const { return dart_slot_.at(d); }
  EdgeId dart_edge(DartId d) const { return dart_edge_.at(d); }
  DartId partner(DartId d) const;
  /// Dart in the opposite slot at the same vertex (through-strand).
  DartId opposite(DartId d) const;
  const std::array<DartId, 2>& edge_darts(EdgeId e) const { return input_.edges.at(e); }
  bool twisted(EdgeId e) const;
  std::array<VertexId, 2> edge_vertices(EdgeId e) const;

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Loop>& loops() const { return loops_; }

  Label edge_label(EdgeId e) const { return edge_label_.at(e); }
  /// Loop labels of the strand through slots {0,2} and the strand through {1,3}.
  std::array<Label, 2> vertex_labels(VertexId v) const;
  /// Faces on the two sides of an edge (equal only for non-disk input, which
  /// build() rejects, so they always differ).
  std::array<FaceId, 2> edge_faces(EdgeId e) const;
  /// Face in the corner between slot k and slot k+1 of vertex v.
  FaceId corner_face(VertexId v, int k) const;

  int euler_characteristic() const;
  const Surface& surface() const { return surface_; }
  /// Edges whose two darts sit at the same vertex. Allowed, but reported.
  std::vector<EdgeId> self_loop_edges() const;
  /// Vertices where a loop crosses itself.
  std::vector<VertexId> self_crossings() const;

  const SurfaceInput& input() const { return input_; }

  bool operator==(const SurfaceComplex& other) const { return input_ == other.input_; }

 private:
  SurfaceComplex() = default;
  void derive();

  int flag_face(DartId d, int side) const { return flag_face_[2 * d + side]; }

  SurfaceInput input_;
  Surface surface_;
  std::vector<VertexId> dart_vertex_;
  std::vector<int> dart_slot_;
  std::vector<EdgeId> dart_edge_;
  std::vector<FaceId> flag_face_;
  std::vector<Face> faces_;
  std::vector<Loop> loops_;
  std::vector<Label> edge_label_;
};

/// Same as SurfaceComplex::build.
SurfaceComplex build_surface_complex(SurfaceInput input);

/// Loops of a complex, ordered by their smallest edge id.
std::vector<Loop> trace_loops(const SurfaceComplex& c);

int euler_characteristic(const SurfaceComplex& c);

}  // namespace hypfan
