#pragma once

// Incidence complexes for 3D orbit decompositions.
//
// Cells of dimension 1..3 list their codimension-one faces (with
// multiplicity); 0-cells have no boundary. Every 2-cell carries the label of
// the hypersurface it lies on.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "hypfan/fan.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

class CellComplex3 {
 public:
  using CellId = int;

  CellComplex3() = default;
  /// boundary[k][i] lists the (k-1)-cells of cell i of dimension k; boundary[0]
  /// only fixes the number of 0-cells. Nothing is validated here.
  CellComplex3(std::array<std::vector<std::vector<CellId>>, 4> boundary, std::vector<Label> hypersurface);

  std::size_t count(int dim) const { return boundary_.at(dim).size(); }
  const std::vector<CellId>& boundary(int dim, CellId id) const { return boundary_.at(dim).at(id); }
  Label hypersurface(CellId two_cell) const { return hypersurface_.at(two_cell); }
  const std::array<std::vector<std::vector<CellId>>, 4>& cells() const { return boundary_; }
  const std::vector<Label>& hypersurfaces() const { return hypersurface_; }

  int euler_characteristic() const;

  /// 0-cells in the closure of a cell, sorted. Requires in-range references.
  std::vector<CellId> vertices_of(int dim, CellId id) const;
  /// Cells of dimension dim+1 having `id` in their boundary (sorted, unique).
  std::vector<CellId> cofaces(int dim, CellId id) const;
  /// Distinct hypersurface labels of the 2-cells whose closure holds the cell.
  std::vector<Label> labels_at(int dim, CellId id) const;
  /// Corner records of a 3-cell: facet labels at each 0-cell of its closure.
  DomainCorners domain_corners(CellId domain) const;
  std::vector<Label> all_labels() const;

  bool operator==(const CellComplex3&) const = default;

 private:
  std::array<std::vector<std::vector<CellId>>, 4> boundary_;
  std::vector<Label> hypersurface_;
};

struct Finding {
  std::string kind;
  int dimension = -1;
  std::vector<int> cells;
  std::string detail;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const;
  /// True if some finding has the given kind.
  bool has(const std::string& kind) const;
};

/// Lists every violated invariant. Advisory findings (SelfLoopEdge) do not
/// make the report fail.
ValidationReport validate_complex3(const CellComplex3& c);

int euler_characteristic(const CellComplex3& c);

}  // namespace hypfan
