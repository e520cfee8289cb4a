#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "zonecover/geometry.hpp"

namespace zonecover {

/// Certifies the equality case of the width-pi theorem: normals coplanar,
/// and after sorting the lines by angle, each consecutive pair (with
/// wraparound) is separated by exactly the sum of its two half-widths.
struct TightnessCertificate {
  std::vector<std::size_t> ordering;          // sorts line_angles increasingly
  std::array<Eigen::VectorXd, 2> plane_basis; // orthonormal
  std::vector<Angle> line_angles;             // in [0, pi), sorted
  std::vector<double> residuals;              // consecutive defects, wraparound last
  double coplanarity_defect = 0.0;            // third singular value of the normals
};

struct NotTight {
  std::string reason;
};

using TightnessResult = std::variant<TightnessCertificate, NotTight>;

/// Zones of the given half-widths (summing to pi/2) whose normals sit in
/// the plane of the first two axes at cumulative angles
/// theta_{i+1} = theta_i + alpha_i + alpha_{i+1}; their total width is
/// exactly pi and they cover S^d. Throws WidthSumNotPi.
std::vector<Zone> tight_configuration(const std::vector<Angle>& half_widths,
                                      int d);

/// Decides whether the zones form a tight total-width-pi configuration.
TightnessResult check_tightness(const std::vector<Zone>& zones,
                                double tol = kDefaultTolerance);

/// A point common to every antipodal cap pair, for total radius above
/// (n-1) pi/2. Runs the witness pipeline on the complement zones.
/// Throws RadiusBudgetTooSmall; requires every radius < pi/2.
UnitVector antipodal_common_point(const std::vector<Cap>& caps,
                                  double tol = kDefaultTolerance);

/// A cap of radius pi/(2n) - tol whose interior misses every given great
/// sphere.
Cap avoiding_cap(const std::vector<GreatSphere>& great_spheres,
                 double tol = kDefaultTolerance);

/// A point of the target cap missed by every zone, for zones of total
/// width below 2 * target.radius. Throws WidthBudgetNotBelow2r.
UnitVector refute_cap_covering(const Cap& target,
                               const std::vector<Zone>& zones,
                               double tol = kDefaultTolerance);

/// A great sphere disjoint from every cap, for total radius below pi/2:
/// asserts arcsin(|<center_i, normal>|) > radius_i + tol for all i.
/// Throws RadiusBudgetTooLarge.
GreatSphere separating_great_sphere(const std::vector<Cap>& caps,
                                    double tol = kDefaultTolerance);

}  // namespace zonecover
