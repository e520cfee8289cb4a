#include "zonecover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

namespace zonecover {

namespace {

constexpr double kArrangementOffset = 1e-5;  // radians along a boundary circle

void check_zone_dimensions(const std::vector<Zone>& zones,
                           Eigen::Index ambient) {
  for (const Zone& zone : zones) {
    if (zone.ambient_dim() != ambient) {
      throw DimensionMismatch("zone dimension mismatch");
    }
  }
}

// Clearance of p against the worst zone: positive once p escapes them all.
double escape_margin(const std::vector<Zone>& zones, const UnitVector& p) {
  double margin = std::numeric_limits<double>::infinity();
  for (const Zone& zone : zones) {
    margin = std::min(margin, distance_to_great_sphere(p, zone.normal()) -
                                  zone.half_width().radians);
  }
  return margin;
}

// Rotate p by `angle` around the axis, mapping a point of a boundary circle
// along that circle.
UnitVector rotate_about_axis(const UnitVector& p, const UnitVector& axis,
                             double angle) {
  const Eigen::Vector3d v = p.coords().head<3>();
  const Eigen::Vector3d k = axis.coords().head<3>();
  const Eigen::Vector3d rotated = v * std::cos(angle) +
                                  k.cross(v) * std::sin(angle) +
                                  k * (k.dot(v)) * (1.0 - std::cos(angle));
  return UnitVector(Eigen::VectorXd(rotated));
}

// A deterministic point on the circle {<p, n> = h}.
UnitVector point_on_circle(const UnitVector& n, double h) {
  const Eigen::Vector3d axis = n.coords().head<3>();
  int least = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(axis[i]) < std::abs(axis[least])) least = i;
  }
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e[least] = 1.0;
  const Eigen::Vector3d q = axis.cross(e).normalized();
  const Eigen::Vector3d p = h * axis + std::sqrt(std::max(0.0, 1.0 - h * h)) * q;
  return UnitVector(Eigen::VectorXd(p));
}

struct Arc {
  double start;   // in [0, 2pi)
  double length;  // in (0, pi)
};

}  // namespace

std::vector<UnitVector> sample_sphere(int d, std::size_t count,
                                      std::uint64_t seed) {
  if (d < 1 || count < 1) {
    throw InvalidArgument("sample_sphere needs d >= 1 and count >= 1");
  }
  std::vector<UnitVector> points;
  points.reserve(count);

  if (d == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      const double phi =
          2.0 * M_PI * static_cast<double>(i) / static_cast<double>(count);
      Eigen::VectorXd v(2);
      v << std::cos(phi), std::sin(phi);
      points.emplace_back(std::move(v));
    }
    return points;
  }

  if (d == 2) {
    // Fibonacci lattice: z strides (-1, 1) half a step in from the poles,
    // the azimuth advances by the golden angle.
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z =
          -1.0 + (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * static_cast<double>(i);
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      points.emplace_back(std::move(v));
    }
    return points;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (points.size() < count) {
    Eigen::VectorXd v(d + 1);
    for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = gauss(rng);
    if (v.norm() > 1e-12) {
      points.emplace_back(std::move(v));
    }
  }
  return points;
}

CoverageReport verify_covering(const std::vector<Zone>& zones,
                               const std::vector<UnitVector>& samples,
                               double tol, std::size_t max_uncovered) {
  if (zones.empty()) {
    throw InvalidArgument("verify_covering needs at least one zone");
  }
  if (max_uncovered == 0) max_uncovered = 1;
  const Eigen::Index ambient = zones.front().ambient_dim();
  check_zone_dimensions(zones, ambient);

  CoverageReport report;
  report.method = CoverageMethod::Sampling;
  report.total_samples = samples.size();
  report.min_margin = -std::numeric_limits<double>::infinity();
  for (const UnitVector& p : samples) {
    if (p.ambient_dim() != ambient) {
      throw DimensionMismatch("sample dimension mismatch");
    }
    const double margin = escape_margin(zones, p);
    report.min_margin = std::max(report.min_margin, margin);
    if (margin > tol) {
      ++report.uncovered_count;
      if (report.uncovered.size() < max_uncovered) {
        report.uncovered.push_back(p);
      }
    }
  }
  if (samples.empty()) report.min_margin = 0.0;
  return report;
}

CoverageReport exact_cover_circle(const std::vector<Zone>& zones, double tol,
                                  std::size_t max_uncovered) {
  if (zones.empty()) {
    throw InvalidArgument("exact_cover_circle needs at least one zone");
  }
  if (max_uncovered == 0) max_uncovered = 1;
  if (zones.front().ambient_dim() != 2) {
    throw WrongDimension("exact_cover_circle works on S^1 (normals in R^2)");
  }
  check_zone_dimensions(zones, 2);

  // Zone i covers the two arcs of half-length alpha_i around the angles
  // theta_i +- pi/2, where theta_i is the angle of its normal.
  std::vector<Arc> arcs;
  arcs.reserve(2 * zones.size());
  for (const Zone& zone : zones) {
    const double theta =
        std::atan2(zone.normal().coords()[1], zone.normal().coords()[0]);
    const double alpha = zone.half_width().radians;
    for (const double center : {theta + M_PI / 2.0, theta - M_PI / 2.0}) {
      double start = std::fmod(center - alpha, 2.0 * M_PI);
      if (start < 0.0) start += 2.0 * M_PI;
      arcs.push_back(Arc{start, 2.0 * alpha});
    }
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });

  CoverageReport report;
  report.method = CoverageMethod::ExactCircle;
  report.min_margin = -std::numeric_limits<double>::infinity();

  // Sweep from the first arc start, merging arcs whose start lies within
  // tol of the covered frontier. A gap that survives is genuine.
  std::vector<double> gap_midpoints;
  const double sweep_origin = arcs.front().start;
  double frontier = sweep_origin;  // covered up to here (absolute angle)
  for (const Arc& arc : arcs) {
    // Unroll the arc start into the sweep frame [sweep_origin, ...).
    double start = arc.start;
    if (start < sweep_origin) start += 2.0 * M_PI;
    if (start > frontier + tol) {
      gap_midpoints.push_back(0.5 * (frontier + start));
      frontier = start + arc.length;
    } else {
      frontier = std::max(frontier, start + arc.length);
    }
    if (frontier >= sweep_origin + 2.0 * M_PI - tol) break;
  }
  if (frontier < sweep_origin + 2.0 * M_PI - tol) {
    gap_midpoints.push_back(0.5 * (frontier + sweep_origin + 2.0 * M_PI));
  }

  auto circle_point = [](double phi) {
    Eigen::VectorXd v(2);
    v << std::cos(phi), std::sin(phi);
    return UnitVector(std::move(v));
  };

  std::size_t probes = 0;
  for (const double phi : gap_midpoints) {
    const UnitVector p = circle_point(phi);
    const double margin = escape_margin(zones, p);
    ++probes;
    report.min_margin = std::max(report.min_margin, margin);
    if (margin > tol) {
      ++report.uncovered_count;
      if (report.uncovered.size() < max_uncovered) {
        report.uncovered.push_back(p);
      }
    }
  }
  if (report.uncovered_count == 0) {
    // Covered: report how close the arc junctions come to escaping.
    for (const Arc& arc : arcs) {
      const UnitVector p = circle_point(arc.start);
      ++probes;
      report.min_margin = std::max(report.min_margin, escape_margin(zones, p));
    }
  }
  report.total_samples = probes;
  return report;
}

std::vector<UnitVector> arrangement_candidates_s2(
    const std::vector<Zone>& zones) {
  if (zones.empty()) {
    throw InvalidArgument("arrangement_candidates_s2 needs at least one zone");
  }
  if (zones.front().ambient_dim() != 3) {
    throw WrongDimension("arrangement candidates need S^2 (normals in R^3)");
  }
  check_zone_dimensions(zones, 3);

  struct Circle {
    UnitVector axis;
    double height;  // <p, axis> on the circle
  };
  std::vector<Circle> circles;
  circles.reserve(2 * zones.size());
  for (const Zone& zone : zones) {
    const double h = std::sin(zone.half_width().radians);
    circles.push_back(Circle{zone.normal(), h});
    circles.push_back(Circle{zone.normal(), -h});
  }

  std::vector<UnitVector> candidates;
  for (std::size_t a = 0; a < circles.size(); ++a) {
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const Eigen::Vector3d na = circles[a].axis.coords().head<3>();
      const Eigen::Vector3d nb = circles[b].axis.coords().head<3>();
      const double dot = na.dot(nb);
      const double det = 1.0 - dot * dot;
      if (det < 1e-14) continue;  // parallel circles
      const double ha = circles[a].height;
      const double hb = circles[b].height;
      const double x = (ha - hb * dot) / det;
      const double y = (hb - ha * dot) / det;
      const Eigen::Vector3d base = x * na + y * nb;
      const double z_sq = 1.0 - base.squaredNorm();
      if (z_sq < 0.0) continue;  // circles do not meet
      const Eigen::Vector3d axis = na.cross(nb).normalized();
      for (const double s : {1.0, -1.0}) {
        const Eigen::Vector3d p = base + s * std::sqrt(z_sq) * axis;
        const UnitVector point{Eigen::VectorXd(p)};
        candidates.push_back(point);
        // Nudge along both incident circles to catch tangencies.
        for (const Circle* c : {&circles[a], &circles[b]}) {
          const double circle_radius =
              std::sqrt(std::max(0.0, 1.0 - c->height * c->height));
          if (circle_radius < 1e-12) continue;
          const double step = kArrangementOffset / circle_radius;
          candidates.push_back(rotate_about_axis(point, c->axis, step));
          candidates.push_back(rotate_about_axis(point, c->axis, -step));
        }
      }
    }
  }
  // One probe per circle so a circle missing every intersection still gets
  // looked at.
  for (const Circle& c : circles) {
    candidates.push_back(point_on_circle(c.axis, c.height));
  }
  return candidates;
}

Cap brute_force_min_cap(const std::vector<Cap>& caps, std::size_t grid) {
  if (caps.empty()) {
    throw InvalidArgument("brute_force_min_cap needs at least one cap");
  }
  if (caps.front().ambient_dim() != 3) {
    throw WrongDimension("brute_force_min_cap works on S^2");
  }
  if (grid < 100) {
    throw InvalidArgument("grid must have at least 100 candidate centers");
  }

  const std::vector<UnitVector> centers = sample_sphere(2, grid);
  double best_radius = std::numeric_limits<double>::infinity();
  const UnitVector* best_center = nullptr;
  for (const UnitVector& c : centers) {
    double radius = 0.0;
    for (const Cap& cap : caps) {
      radius = std::max(radius, angular_distance(c, cap.center()).radians +
                                    cap.radius().radians);
    }
    if (radius < best_radius) {
      best_radius = radius;
      best_center = &c;
    }
  }
  return Cap(*best_center, Angle{best_radius});
}

}  // namespace zonecover
