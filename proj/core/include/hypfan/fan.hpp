#pragma once

// Fans: one exact vector per hypersurface label, and the cone geometry used to
// decide whether a fan is compatible with a cell complex.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypfan/rational.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

class CellComplex3;

class Fan {
 public:
  Fan() = default;
  explicit Fan(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

  /// Throws ZeroVector or DimensionMismatch.
  void set(Label label, Vec v);
  void erase(Label label) { vectors_.erase(label); }
  bool contains(Label label) const { return vectors_.count(label) != 0; }
  /// Throws UnknownLabel.
  const Vec& at(Label label) const;
  const std::map<Label, Vec>& vectors() const { return vectors_; }
  std::vector<Label> labels() const;

  bool operator==(const Fan&) const = default;

 private:
  int dimension_ = 0;
  std::map<Label, Vec> vectors_;
};

/// Outcome of a compatibility test. `reason` is empty when compatible,
/// otherwise one of Digon, AngleOutOfRange, TurningSignFlip, WindingNotOne,
/// RepeatedLabel, DegenerateCorner, OverlappingCones, UnpairedEdgeCone,
/// SameSideEdgeCone.
struct Compatibility {
  bool ok = true;
  std::string reason;
  std::string detail;

  static Compatibility pass() { return {}; }
  static Compatibility fail(std::string reason, std::string detail) {
    return {false, std::move(reason), std::move(detail)};
  }
};

/// A face given as the cyclic sequence of loop labels along its boundary.
/// Exact: uses cross products and half-plane ordering only.
Compatibility face_compatible_2d(const std::vector<Label>& face, const Fan& fan);

/// Corner records of one 3-dimensional domain: for every corner, the labels
/// of the three facets that meet there.
struct DomainCorners {
  std::vector<std::array<Label, 3>> corners;
};

Compatibility domain_compatible_3d(const DomainCorners& domain, const Fan& fan);

struct DomainVerdict {
  int domain = 0;
  Compatibility result;
};

struct FanReport {
  bool ok = true;
  std::vector<DomainVerdict> domains;
  /// Labels of the complex that the fan does not cover.
  std::vector<Label> missing_labels;
};

FanReport fan_compatible(const SurfaceComplex& c, const Fan& fan);
FanReport fan_compatible(const CellComplex3& c, const Fan& fan);

/// w = sum alpha_i g_i with every alpha_i >= 0 (> 0 when strict).
/// Throws DimensionMismatch or DegenerateCorner.
bool cone_contains(const std::vector<Vec>& generators, const Vec& w, bool strict);

struct Genericity {
  bool generic = true;
  std::vector<Label> witness;
};

/// Checks w against every subset of size < n of each label set in
/// `cooccurring` (typically the labels through each vertex). With strict set,
/// all subsets of the fan's labels are checked instead.
Genericity is_generic(const Vec& w, const Fan& fan, const std::vector<std::vector<Label>>& cooccurring,
                      bool strict = false);

/// Label sets through each vertex.
std::vector<std::vector<Label>> vertex_label_sets(const SurfaceComplex& c);
std::vector<std::vector<Label>> vertex_label_sets(const CellComplex3& c);

}  // namespace hypfan
