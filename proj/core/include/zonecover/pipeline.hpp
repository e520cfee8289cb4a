#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "zonecover/covering.hpp"
#include "zonecover/geometry.hpp"

namespace zonecover {

/// A sign vector eps in {+-1}^n together with w = sum(eps_i * w_i). At the
/// end of the flip search, flipping any single sign does not increase |w|.
struct SignState {
  std::vector<int> signs;
  Eigen::VectorXd w;
  double norm = 0.0;
};

/// One executed sign flip: which index, and |w|^2 right after.
struct FlipEvent {
  std::size_t index;
  double norm_sq_after;
};

/// Greedy single-flip ascent of |w| over sign vectors, starting from all +1.
/// Each executed flip strictly increases |w|^2, so the search terminates.
/// Pass `trace` to record the executed flips.
SignState local_max_signs(const std::vector<WeightedNormal>& weighted,
                          std::vector<FlipEvent>* trace = nullptr);

/// One zone-replacement round: the minimal violating index set, the zone
/// that replaced it, and the cap-merge certificate behind the replacement.
/// Indices refer to the working zone list at the time of the step.
struct MergeStep {
  std::vector<std::size_t> merged_indices;
  Zone replacement;
  MergeCertificate certificate;
};

/// A certified uncovered point: the witness, its clearance against every
/// original zone (distance to the central great sphere minus the
/// half-width), and the replacement trace that led to it.
struct WitnessReport {
  UnitVector witness;
  std::vector<Angle> clearances;
  std::vector<MergeStep> trace;
  int iterations = 0;
};

/// Produces a point outside every zone, given total width < pi. Runs the
/// sign search; if |w| < 1 the normalized w is the witness, otherwise a
/// minimal violating subset of zones is merged into one replacement zone
/// and the search repeats on the shorter list.
///
/// Throws WidthBudgetExceeded (total width >= pi - tol), SubsetBoundExceeded
/// (more than 20 zones), or NumericalStall (|w| within tol of 1 and no
/// violating subset to merge).
WitnessReport find_witness(const std::vector<Zone>& zones,
                           double tol = kDefaultTolerance);

/// Returned instead of a witness when the zones' total width reaches pi;
/// no coverage claim is made in that regime.
struct TotalWidthAtLeastPi {
  double total_width = 0.0;
};

using RefutationOutcome = std::variant<WitnessReport, TotalWidthAtLeastPi>;

/// Dispatch wrapper: delegates to find_witness when total width < pi - tol,
/// otherwise reports TotalWidthAtLeastPi.
RefutationOutcome refute_or_report(const std::vector<Zone>& zones,
                                   double tol = kDefaultTolerance);

}  // namespace zonecover
