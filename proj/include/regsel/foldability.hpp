#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regsel/crease.hpp"

namespace regsel {

inline constexpr double kAngleTolerance = 1e-6; // degrees, float inputs only

struct VertexFoldReport {
  int vertex = -1;
  int degree = 0;
  bool even_degree = false;
  std::vector<double> sector_angles;
  double alternating_sum_odd = 0;  // sectors 1, 3, 5, ...
  double alternating_sum_even = 0; // sectors 2, 4, 6, ...
  bool alternating_ok = false;
  bool exact = false; // decided with rational arithmetic
  bool pass() const { return even_degree && alternating_ok; }
};

struct FoldReport {
  std::vector<VertexFoldReport> vertices;
  bool pass = true;
};

/// Even degree and alternating sector sums of 180° at every interior vertex.
/// These conditions are necessary, not sufficient, for flat foldability.
FoldReport check_flat_foldable_necessary(const CreasePattern &p);

nlohmann::json fold_report_to_json(const FoldReport &r);

} // namespace regsel
