#pragma once

// Combinatorial gradient-like flow of a generic direction w: vertex indices,
// oriented 1-cells, cycle search, levels, domain counts and Morse data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypfan/cell_complex3.hpp"
#include "hypfan/fan.hpp"
#include "hypfan/report.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

/// What the flow needs from a complex of either dimension.
struct Skeleton {
  int n = 0;
  /// The n hypersurface labels through each vertex.
  std::vector<std::vector<Label>> vertex_labels;
  struct Edge {
    int a = 0, b = 0;
    /// The n-1 labels containing the edge.
    std::vector<Label> labels;
  };
  std::vector<Edge> edges;
  /// Corner vertices of each top cell.
  std::vector<std::vector<int>> domain_corners;
  int euler = 0;
};

Skeleton skeleton(const SurfaceComplex& c);
Skeleton skeleton(const CellComplex3& c);

/// A direction certified generic for a (complex, fan) pair.
class Direction {
 public:
  /// Throws NonGenericDirection with the witness in the message.
  Direction(Vec w, const Fan& fan, const std::vector<std::vector<Label>>& cooccurring);
  const Vec& vector() const { return w_; }

 private:
  Vec w_;
};

struct VertexIndex {
  int vertex = 0;
  std::vector<Label> labels;
  std::vector<Rational> alpha;
  int index = 0;
};

/// Throws NonGenericDirection if some coordinate vanishes.
VertexIndex vertex_index(const Skeleton& s, int vertex, const Fan& fan, const Vec& w);

struct IndexCounts {
  std::vector<int> c;
  bool operator==(const IndexCounts&) const = default;
};

IndexCounts index_counts(const Skeleton& s, const Fan& fan, const Vec& w);

struct FlowGraph {
  int n = 0;
  std::vector<VertexIndex> nodes;
  struct Arc {
    int edge = 0;
    int tail = 0;
    int head = 0;
  };
  std::vector<Arc> arcs;
};

/// Throws NonGenericDirection or InconsistentEdgeSigns.
FlowGraph orient_edges(const Skeleton& s, const Fan& fan, const Vec& w);

/// Directed cycles found through back arcs of a depth-first search, each as a
/// vertex sequence. Empty when the graph is acyclic.
std::vector<std::vector<int>> detect_cycles(const FlowGraph& g);

/// Integer levels strictly increasing along arcs; sinks sit on the top level.
/// Throws CyclicFlowGraph.
std::vector<int> assign_levels(const FlowGraph& g);

struct DomainCountReport {
  int domains = 0;
  int attractors = 0;
  int repellers = 0;
  int n = 0;
  /// Domains grouped by their attractor corner (the jigsaw pieces).
  std::map<int, std::vector<int>> jigsaw;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

DomainCountReport check_domain_count(const Skeleton& s, const Fan& fan, const Vec& w);

struct PairDecompositionReport {
  /// (i, j, |L_i cap L_j|) for every pair whose 2-cone holds w.
  std::vector<std::array<int, 3>> contributing;
  int total = 0;
  int attractors = 0;
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

PairDecompositionReport attractor_pair_decomposition_s2(const SurfaceComplex& c, const Fan& fan, const Vec& w);

struct MorseReport {
  std::vector<Verdict> verdicts;
  bool ok() const { return all_pass(verdicts); }
};

MorseReport morse_inequalities(const IndexCounts& counts, const std::vector<int>& betti);

}  // namespace hypfan
