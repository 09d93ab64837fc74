#pragma once

// Search for a planar fan compatible with every face of a surface complex.
//
// The search runs over circular orders of the loop directions (label 0 first,
// mirror images skipped). A full order is accepted when every face reads
// cyclically monotone and the half-turn bounds on consecutive gaps form a
// feasible system of difference constraints; the solution is then placed on
// the boundary of the square [-1,1]^2 to get exact rational vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypfan/fan.hpp"
#include "hypfan/report.hpp"
#include "hypfan/surface_complex.hpp"

namespace hypfan {

enum class SearchStatus { Found, Infeasible, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<Fan> fan;
  /// Circular order of labels behind the fan.
  std::vector<Label> order;
  std::uint64_t nodes = 0;
  std::string reason;
};

constexpr std::uint64_t kDefaultSearchBudget = 1000000;

SearchResult search_fan(const SurfaceComplex& c, std::uint64_t budget = kDefaultSearchBudget);

struct RealizabilityReport {
  /// Realizable, Rejected, Infeasible or BudgetExhausted.
  std::string verdict;
  std::string failed_condition;
  SearchResult search;
  std::vector<Verdict> verdicts;
};

/// Sphere parity conditions first (when the complex is on the sphere), then
/// the search.
RealizabilityReport realizability_report(const SurfaceComplex& c, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace hypfan
