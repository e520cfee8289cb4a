#include "zonecover/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "zonecover/pipeline.hpp"

namespace zonecover {

namespace {

UnitVector planar_direction(int d, double theta) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d + 1);
  v[0] = std::cos(theta);
  v[1] = std::sin(theta);
  return UnitVector(std::move(v));
}

// The corollary constructions feed zones whose total width sits tol-close
// to pi into the pipeline, where |w| lands tol-close to 1. Running the
// pipeline's |w|-band at the caller's tol would swallow those cases, so it
// gets a much finer band; the constructions re-verify their own
// postconditions at the caller's tol afterwards.
double pipeline_tolerance(double tol) { return std::min(tol, 1e-13); }

}  // namespace

std::vector<Zone> tight_configuration(const std::vector<Angle>& half_widths,
                                      int d) {
  if (half_widths.size() < 2) {
    throw InvalidArgument("a tight configuration needs at least two zones");
  }
  if (d < 1) {
    throw InvalidArgument("sphere dimension must be at least 1");
  }
  double width_sum = 0.0;
  for (const Angle& hw : half_widths) width_sum += 2.0 * hw.radians;
  if (std::abs(width_sum - M_PI) > 1e-12) {
    throw WidthSumNotPi("half-widths must sum to pi/2, got total width " +
                        std::to_string(width_sum));
  }

  std::vector<Zone> zones;
  zones.reserve(half_widths.size());
  double theta = 0.0;
  for (std::size_t i = 0; i < half_widths.size(); ++i) {
    zones.emplace_back(planar_direction(d, theta), half_widths[i]);
    if (i + 1 < half_widths.size()) {
      theta += half_widths[i].radians + half_widths[i + 1].radians;
    }
  }
  return zones;
}

TightnessResult check_tightness(const std::vector<Zone>& zones, double tol) {
  const std::size_t n = zones.size();
  if (n < 2) {
    return NotTight{"fewer than two zones"};
  }
  double width_sum = 0.0;
  for (const Zone& zone : zones) width_sum += zone.width();
  if (std::abs(width_sum - M_PI) > tol) {
    return NotTight{"total width " + std::to_string(width_sum) +
                    " differs from pi"};
  }

  const Eigen::Index ambient = zones.front().ambient_dim();
  Eigen::MatrixXd normals(static_cast<Eigen::Index>(n), ambient);
  for (std::size_t i = 0; i < n; ++i) {
    normals.row(static_cast<Eigen::Index>(i)) =
        zones[i].normal().coords().transpose();
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(normals, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double coplanarity_defect = sv.size() > 2 ? sv(2) : 0.0;
  if (coplanarity_defect > tol) {
    return NotTight{"normals do not lie in a common 2-plane"};
  }
  const Eigen::VectorXd b0 = svd.matrixV().col(0);
  const Eigen::VectorXd b1 = svd.matrixV().col(1);

  // Lines are normals modulo sign: canonicalize to a nonnegative coordinate
  // on the second basis axis (positive first coordinate when it vanishes),
  // giving angles in [0, pi).
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = zones[i].normal().coords().dot(b0);
    double y = zones[i].normal().coords().dot(b1);
    if (y < 0.0 || (y == 0.0 && x < 0.0)) {
      x = -x;
      y = -y;
    }
    double phi = std::atan2(y, x);
    if (phi >= M_PI) phi -= M_PI;
    angles[i] = phi;
  }

  std::vector<std::size_t> ordering(n);
  std::iota(ordering.begin(), ordering.end(), std::size_t{0});
  std::sort(ordering.begin(), ordering.end(),
            [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });

  std::vector<Angle> sorted_angles;
  sorted_angles.reserve(n);
  for (const std::size_t i : ordering) sorted_angles.push_back(Angle{angles[i]});

  std::vector<double> residuals(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = ordering[k];
    const std::size_t j = ordering[(k + 1) % n];
    const double gap = k + 1 < n
                           ? angles[j] - angles[i]
                           : angles[j] + M_PI - angles[i];
    const double expected =
        zones[i].half_width().radians + zones[j].half_width().radians;
    residuals[k] = std::abs(gap - expected);
    if (residuals[k] > tol) {
      return NotTight{"consecutive line angle defect " +
                      std::to_string(residuals[k]) + " at sorted position " +
                      std::to_string(k)};
    }
  }

  return TightnessCertificate{std::move(ordering),
                              {b0, b1},
                              std::move(sorted_angles),
                              std::move(residuals),
                              coplanarity_defect};
}

UnitVector antipodal_common_point(const std::vector<Cap>& caps, double tol) {
  if (caps.empty()) {
    throw InvalidArgument("antipodal_common_point needs at least one cap");
  }
  double radius_sum = 0.0;
  for (const Cap& cap : caps) {
    if (cap.radius().radians >= M_PI / 2.0) {
      throw InvalidArgument(
          "antipodal_common_point requires every radius < pi/2");
    }
    radius_sum += cap.radius().radians;
  }
  const double bound = (static_cast<double>(caps.size()) - 1.0) * M_PI / 2.0;
  if (radius_sum <= bound + tol) {
    throw RadiusBudgetTooSmall("total radius " + std::to_string(radius_sum) +
                               " does not exceed (n-1) pi/2");
  }

  // The complement of the antipodal pair of a radius-r cap is the zone of
  // half-width pi/2 - r around the cap's polar great sphere.
  std::vector<Zone> complements;
  complements.reserve(caps.size());
  for (const Cap& cap : caps) {
    complements.emplace_back(cap.center(),
                             Angle{M_PI / 2.0 - cap.radius().radians});
  }

  const WitnessReport report =
      find_witness(complements, pipeline_tolerance(tol));
  for (const Cap& cap : caps) {
    const double to_pair =
        std::min(angular_distance(report.witness, cap.center()).radians,
                 angular_distance(report.witness, cap.center().antipode())
                     .radians);
    if (to_pair > cap.radius().radians + tol) {
      throw PostconditionFailed(
          "witness misses an antipodal cap pair by more than tol");
    }
  }
  return report.witness;
}

Cap avoiding_cap(const std::vector<GreatSphere>& great_spheres, double tol) {
  if (great_spheres.empty()) {
    throw InvalidArgument("avoiding_cap needs at least one great sphere");
  }
  const double n = static_cast<double>(great_spheres.size());
  const double half_width = M_PI / (2.0 * n) - tol;
  if (half_width <= 0.0) {
    throw InvalidArgument("tolerance swallows the whole pi/(2n) budget");
  }

  std::vector<Zone> zones;
  zones.reserve(great_spheres.size());
  for (const GreatSphere& gs : great_spheres) {
    zones.push_back(gs.thicken(Angle{half_width}));
  }

  const WitnessReport report = find_witness(zones, pipeline_tolerance(tol));
  return Cap(report.witness, Angle{half_width});
}

UnitVector refute_cap_covering(const Cap& target,
                               const std::vector<Zone>& zones, double tol) {
  const double r = target.radius().radians;
  if (r > M_PI / 2.0) {
    throw InvalidArgument("target cap radius must be at most pi/2");
  }
  double width_sum = 0.0;
  for (const Zone& zone : zones) width_sum += zone.width();
  if (width_sum >= 2.0 * r - tol) {
    throw WidthBudgetNotBelow2r("total zone width " +
                                std::to_string(width_sum) +
                                " is not below twice the target radius");
  }

  std::vector<Zone> augmented = zones;
  const double complement_half_width = M_PI / 2.0 - r;
  if (complement_half_width > 0.0) {
    // The complement of the target cap and its antipode.
    augmented.emplace_back(target.center(), Angle{complement_half_width});
  }

  const WitnessReport report =
      find_witness(augmented, pipeline_tolerance(tol));
  // The witness escapes the complement zone, so it lies in the target cap
  // or its antipodal twin; zones are antipodally symmetric, so the antipode
  // is equally uncovered.
  UnitVector point = report.witness.dot(target.center()) >= 0.0
                         ? report.witness
                         : report.witness.antipode();
  if (angular_distance(point, target.center()).radians > r + tol) {
    throw PostconditionFailed("returned point falls outside the target cap");
  }
  for (const Zone& zone : zones) {
    if (distance_to_great_sphere(point, zone.normal()) <
        zone.half_width().radians - tol) {
      throw PostconditionFailed("returned point lands inside an input zone");
    }
  }
  return point;
}

GreatSphere separating_great_sphere(const std::vector<Cap>& caps,
                                    double tol) {
  if (caps.empty()) {
    throw InvalidArgument("separating_great_sphere needs at least one cap");
  }
  double radius_sum = 0.0;
  for (const Cap& cap : caps) {
    if (cap.radius().radians >= M_PI / 2.0) {
      throw InvalidArgument(
          "separating_great_sphere requires every radius < pi/2");
    }
    radius_sum += cap.radius().radians;
  }
  if (radius_sum >= M_PI / 2.0 - tol) {
    throw RadiusBudgetTooLarge("total cap radius " +
                               std::to_string(radius_sum) +
                               " reaches pi/2");
  }

  std::vector<Zone> duals;
  duals.reserve(caps.size());
  for (const Cap& cap : caps) duals.push_back(dualize_cap(cap));

  const WitnessReport report = find_witness(duals, pipeline_tolerance(tol));
  // Disjointness: the distance from a cap center to the great sphere with
  // normal p is arcsin(|<center, p>|) and must clear the cap radius.
  for (const Cap& cap : caps) {
    if (distance_to_great_sphere(cap.center(), report.witness) <=
        cap.radius().radians + tol) {
      throw PostconditionFailed(
          "separating great sphere fails to clear a cap");
    }
  }
  return GreatSphere(report.witness);
}

}  // namespace zonecover
