#include "zonecover/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace zonecover {

namespace {

double total_radius(const std::vector<Cap>& caps) {
  double alpha = 0.0;
  for (const Cap& cap : caps) alpha += cap.radius().radians;
  return alpha;
}

void check_common_dimension(const std::vector<Cap>& caps) {
  for (const Cap& cap : caps) {
    if (cap.ambient_dim() != caps.front().ambient_dim()) {
      throw DimensionMismatch("caps live in different ambient spaces");
    }
  }
}

}  // namespace

MergeCertificate merge_caps(const std::vector<Cap>& caps, double tol) {
  if (caps.empty()) {
    throw InvalidArgument("merge_caps needs at least one cap");
  }
  check_common_dimension(caps);

  const double alpha = total_radius(caps);
  if (alpha > M_PI / 2.0 + tol) {
    throw RadiusBudgetExceeded("total cap radius " + std::to_string(alpha) +
                               " exceeds pi/2");
  }

  Eigen::VectorXd w = Eigen::VectorXd::Zero(caps.front().ambient_dim());
  for (const Cap& cap : caps) {
    w += std::sin(cap.radius().radians) * cap.center().coords();
  }
  const double w_norm = w.norm();
  if (w_norm <= tol) {
    throw ZeroVector("weighted cap centers sum to (nearly) zero");
  }

  const double slack_norm = w_norm - std::sin(alpha);
  if (slack_norm < -tol) {
    throw ConditionsViolated("|w| = " + std::to_string(w_norm) +
                                 " falls short of sin(alpha)",
                             -1);
  }

  std::vector<double> slack_per_cap(caps.size());
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const double alpha_i = caps[i].radius().radians;
    const Eigen::VectorXd rest =
        w - std::sin(alpha_i) * caps[i].center().coords();
    slack_per_cap[i] = std::sin(alpha - alpha_i) - rest.norm();
    if (slack_per_cap[i] < -tol) {
      throw ConditionsViolated(
          "|w - w_i| exceeds sin(alpha - alpha_i) for cap " +
              std::to_string(i),
          static_cast<long>(i));
    }
  }

  Cap merged(UnitVector(w), Angle{alpha});
  return MergeCertificate{caps,       std::move(merged),       w,
                          Angle{alpha}, slack_norm, std::move(slack_per_cap)};
}

ShrinkDecision strict_shrink_possible(const MergeCertificate& certificate,
                                      double tol) {
  if (certificate.slack_norm > tol) {
    return ShrinkDecision{true, std::nullopt};
  }
  for (std::size_t i = 0; i < certificate.slack_per_cap.size(); ++i) {
    if (certificate.slack_per_cap[i] <= tol) {
      // |w| = sin(alpha) and |w - w_i| = sin(alpha - alpha_i): the lemma's
      // exceptional pattern.
      return ShrinkDecision{false, i};
    }
  }
  return ShrinkDecision{true, std::nullopt};
}

ShrinkDecision strict_shrink_possible(const std::vector<Cap>& caps,
                                      double tol) {
  return strict_shrink_possible(merge_caps(caps, tol), tol);
}

std::vector<double> shrink_search_grid(double alpha) {
  std::vector<double> grid;
  grid.reserve(40);
  for (int k = 1; k <= 40; ++k) {
    grid.push_back(alpha * std::pow(2.0, -k));
  }
  return grid;
}

Cap shrink_three_caps(const Cap& d1, const Cap& d2, const Cap& d3,
                      double tol) {
  const std::vector<Cap> caps = {d1, d2, d3};
  check_common_dimension(caps);

  const double a1 = d1.radius().radians;
  const double a2 = d2.radius().radians;
  const double a3 = d3.radius().radians;
  const double alpha = a1 + a2 + a3;
  if (alpha > M_PI / 2.0 + tol) {
    throw RadiusBudgetExceeded("total radius of the three caps exceeds pi/2");
  }

  const Eigen::VectorXd w1 = std::sin(a1) * d1.center().coords();
  const Eigen::VectorXd w2 = std::sin(a2) * d2.center().coords();
  const Eigen::VectorXd w3 = std::sin(a3) * d3.center().coords();
  const Eigen::VectorXd w12 = w1 + w2;
  const Eigen::VectorXd w123 = w12 + w3;

  if (std::abs(w12.norm() - std::sin(a1 + a2)) > tol) {
    throw PreconditionMismatch("|w1 + w2| does not equal sin(a1 + a2)");
  }
  if (std::abs(w123.norm() - std::sin(alpha)) > tol) {
    throw PreconditionMismatch("|w1 + w2 + w3| does not equal sin(alpha)");
  }

  const Eigen::Index ambient = d1.ambient_dim();
  if (ambient < 3) {
    throw CoplanarInputs("three vectors in R^2 are always coplanar");
  }
  Eigen::MatrixXd m(ambient, 3);
  m.col(0) = w1;
  m.col(1) = w2;
  m.col(2) = w3;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  // Scale-invariant rank test.
  if (sv(2) <= 1e-8 * sv(0)) {
    throw CoplanarInputs("w1, w2, w3 are coplanar within tolerance");
  }

  const std::vector<const Cap*> all = {&d1, &d2, &d3};
  double best_radius = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_w = w123;
  for (const double eps : shrink_search_grid(alpha)) {
    const Eigen::VectorXd w = w123 + eps * w3;
    const UnitVector center{Eigen::VectorXd(w)};
    double radius = 0.0;
    for (const Cap* cap : all) {
      radius = std::max(radius,
                        angular_distance(center, cap->center()).radians +
                            cap->radius().radians);
    }
    if (radius < best_radius) {
      best_radius = radius;
      best_w = w;
    }
  }
  return Cap(UnitVector(std::move(best_w)), Angle{best_radius});
}

}  // namespace zonecover
