#include "zonecover/geometry.hpp"

#include <cmath>
#include <utility>

namespace zonecover {

double clamp_unit(double x) {
  if (x < -1.0) return -1.0;
  if (x > 1.0) return 1.0;
  return x;
}

UnitVector::UnitVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw InvalidArgument("UnitVector needs at least 2 coordinates (d >= 1)");
  }
  if (!coords_.allFinite()) {
    throw InvalidArgument("UnitVector coordinates must be finite");
  }
  const double norm = coords_.norm();
  if (norm <= 0.0) {
    throw InvalidArgument("cannot normalize the zero vector");
  }
  coords_ /= norm;
}

UnitVector UnitVector::axis(Eigen::Index ambient, Eigen::Index i) {
  if (ambient < 2 || i < 0 || i >= ambient) {
    throw InvalidArgument("axis index out of range");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient);
  v[i] = 1.0;
  return UnitVector(std::move(v));
}

UnitVector UnitVector::antipode() const {
  UnitVector flipped = *this;
  flipped.coords_ = -flipped.coords_;
  return flipped;
}

double UnitVector::dot(const UnitVector& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw DimensionMismatch("unit vectors live in different ambient spaces");
  }
  return coords_.dot(other.coords_);
}

Zone::Zone(UnitVector normal, Angle half_width)
    : normal_(std::move(normal)), half_width_(half_width) {
  if (!std::isfinite(half_width_.radians) || half_width_.radians <= 0.0 ||
      half_width_.radians >= M_PI / 2.0) {
    throw InvalidArgument("zone half-width must lie in (0, pi/2)");
  }
}

Cap::Cap(UnitVector center, Angle radius)
    : center_(std::move(center)), radius_(radius) {
  if (!std::isfinite(radius_.radians) || radius_.radians <= 0.0 ||
      radius_.radians > M_PI) {
    throw InvalidArgument("cap radius must lie in (0, pi]");
  }
}

WeightedNormal::WeightedNormal(UnitVector direction, double weight)
    : direction_(std::move(direction)), weight_(weight) {
  if (!std::isfinite(weight_) || weight_ <= 0.0 || weight_ > 1.0) {
    throw InvalidArgument("weighted normal weight must lie in (0, 1]");
  }
}

WeightedNormal WeightedNormal::from_zone(const Zone& zone) {
  return WeightedNormal(zone.normal(), std::sin(zone.half_width().radians));
}

WeightedNormal WeightedNormal::from_cap(const Cap& cap) {
  return WeightedNormal(cap.center(), std::sin(cap.radius().radians));
}

Angle angular_distance(const UnitVector& p, const UnitVector& q) {
  return Angle{std::acos(clamp_unit(p.dot(q)))};
}

double distance_to_great_sphere(const UnitVector& p, const UnitVector& normal) {
  return std::asin(clamp_unit(std::abs(p.dot(normal))));
}

Membership zone_membership(const Zone& zone, const UnitVector& p, double tol) {
  // |<p,n>| vs sin(half_width): monotone in the distance to the great
  // sphere and better conditioned near the boundary than arccos.
  const double s = std::abs(p.dot(zone.normal()));
  const double edge = std::sin(zone.half_width().radians);
  if (s < edge - tol) return Membership::Inside;
  if (s <= edge + tol) return Membership::Boundary;
  return Membership::Outside;
}

Membership cap_membership(const Cap& cap, const UnitVector& p, double tol) {
  const double c = p.dot(cap.center());
  const double edge = std::cos(cap.radius().radians);
  if (c > edge + tol) return Membership::Inside;
  if (c >= edge - tol) return Membership::Boundary;
  return Membership::Outside;
}

Zone dualize_cap(const Cap& cap) {
  if (cap.radius().radians >= M_PI / 2.0) {
    throw InvalidArgument("dual zone of a cap needs radius < pi/2");
  }
  return Zone(cap.center(), cap.radius());
}

Cap dualize_zone(const Zone& zone) {
  return Cap(zone.normal(), zone.half_width());
}

}  // namespace zonecover
