#pragma once

#include <cstdint>
#include <vector>

#include "zonecover/geometry.hpp"

namespace zonecover {

enum class CoverageMethod { Sampling, ExactCircle, ArrangementS2 };

/// Outcome of a coverage check. `min_margin` is the largest value over the
/// probed points of min_i(distance to great sphere i - half_width_i); it
/// exceeds tol exactly when some probe escapes every zone, and `uncovered`
/// holds those escapees (capped at `max_uncovered`).
struct CoverageReport {
  std::size_t total_samples = 0;
  std::size_t uncovered_count = 0;
  std::vector<UnitVector> uncovered;
  double min_margin = 0.0;
  CoverageMethod method = CoverageMethod::Sampling;

  bool covered() const { return uncovered_count == 0; }
};

/// Deterministic samplers: equal angles on S^1, a Fibonacci lattice on S^2,
/// seeded normalized Gaussians for d >= 3.
std::vector<UnitVector> sample_sphere(int d, std::size_t count,
                                      std::uint64_t seed = 0);

/// Sampling coverage check of the zones against the given probe points.
CoverageReport verify_covering(const std::vector<Zone>& zones,
                               const std::vector<UnitVector>& samples,
                               double tol = kDefaultTolerance,
                               std::size_t max_uncovered = 16);

/// Exact S^1 decision: each zone restricted to the circle is two antipodal
/// arcs of half-length alpha_i centered at the two points orthogonal to its
/// normal; the union is swept by sorted endpoints. Uncovered gaps are
/// reported through their midpoints. Throws WrongDimension unless d = 1.
CoverageReport exact_cover_circle(const std::vector<Zone>& zones,
                                  double tol = kDefaultTolerance,
                                  std::size_t max_uncovered = 16);

/// Semi-exact S^2 probe set: all pairwise intersections of zone boundary
/// circles, each with four copies nudged 1e-5 rad along the incident
/// circles, plus one point per boundary circle. If the closed zones miss
/// any point of the sphere, they miss one of these candidates or a whole
/// boundary-circle neighborhood. Throws WrongDimension unless d = 2.
std::vector<UnitVector> arrangement_candidates_s2(
    const std::vector<Zone>& zones);

/// Grid oracle for the smallest covering cap (d = 2): the Fibonacci-grid
/// center minimizing max_i(distance to center_i + radius_i).
Cap brute_force_min_cap(const std::vector<Cap>& caps, std::size_t grid);

}  // namespace zonecover
