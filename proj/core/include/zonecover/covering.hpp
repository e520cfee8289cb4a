#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "zonecover/geometry.hpp"

namespace zonecover {

/// Record of a successful cap merge: the inputs, the covering cap of radius
/// alpha = sum(alpha_i) centered at w/|w|, and the verified slacks of the
/// conditions |w| >= sin(alpha), |w - w_i| <= sin(alpha - alpha_i).
struct MergeCertificate {
  std::vector<Cap> inputs;
  Cap merged;
  Eigen::VectorXd w;
  Angle alpha;
  double slack_norm = 0.0;               // |w| - sin(alpha)
  std::vector<double> slack_per_cap;     // sin(alpha - alpha_i) - |w - w_i|
};

/// Merge a family of caps of total radius <= pi/2 into one cap of radius
/// sum(alpha_i) centered at w/|w|, after checking both merge conditions.
/// n = 1 returns the cap itself so replacement pipelines stay uniform.
///
/// Throws RadiusBudgetExceeded, ZeroVector, or ConditionsViolated.
MergeCertificate merge_caps(const std::vector<Cap>& caps,
                            double tol = kDefaultTolerance);

/// Whether a cap of radius strictly below the merge budget also covers:
/// true iff |w| > sin(alpha) or every |w - w_i| < sin(alpha - alpha_i).
/// When false, `equality_index` is a cap realizing the degenerate pattern
/// |w| = sin(alpha), |w - w_i| = sin(alpha - alpha_i).
struct ShrinkDecision {
  bool possible = false;
  std::optional<std::size_t> equality_index;
};

ShrinkDecision strict_shrink_possible(const std::vector<Cap>& caps,
                                      double tol = kDefaultTolerance);
ShrinkDecision strict_shrink_possible(const MergeCertificate& certificate,
                                      double tol = kDefaultTolerance);

/// Degenerate-equality escape for three caps: given
/// |w1 + w2| = sin(a1 + a2) and |w1 + w2 + w3| = sin(a1 + a2 + a3) with
/// w1, w2, w3 not coplanar, returns a cap of radius strictly below the
/// budget a1 + a2 + a3 that still covers all three caps. The center is
/// w123 + eps * w3 for the best eps on the geometric grid
/// {alpha * 2^-k : k = 1..40}, with radius max_i(angle(w, u_i) + alpha_i).
///
/// Throws CoplanarInputs, PreconditionMismatch, or RadiusBudgetExceeded.
Cap shrink_three_caps(const Cap& d1, const Cap& d2, const Cap& d3,
                      double tol = kDefaultTolerance);

/// Grid of perturbation magnitudes searched by shrink_three_caps, exposed
/// so tests can re-derive the radius profile independently.
std::vector<double> shrink_search_grid(double alpha);

}  // namespace zonecover
