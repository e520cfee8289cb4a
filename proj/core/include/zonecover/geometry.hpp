#pragma once

#include <Eigen/Core>

#include "zonecover/errors.hpp"

namespace zonecover {

/// Default tolerance for three-way membership classifications and most
/// geometric comparisons. Overridable per call.
inline constexpr double kDefaultTolerance = 1e-9;

/// Clamp an inner product into [-1, 1] so arccos/arcsin never see a value
/// pushed out of domain by roundoff.
double clamp_unit(double x);

/// An angle in radians. Owning types enforce their own ranges.
struct Angle {
  double radians = 0.0;

  friend bool operator==(const Angle&, const Angle&) = default;
};

/// A point of S^d stored as d+1 coordinates of unit Euclidean norm.
/// Also serves as the unit normal of a central hyperplane and as a cap
/// center. Construction normalizes; copies preserve bits.
class UnitVector {
 public:
  explicit UnitVector(Eigen::VectorXd coords);

  /// e_i in R^ambient (ambient = d+1 >= 2).
  static UnitVector axis(Eigen::Index ambient, Eigen::Index i);

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index ambient_dim() const { return coords_.size(); }
  int sphere_dim() const { return static_cast<int>(coords_.size()) - 1; }

  UnitVector antipode() const;
  double dot(const UnitVector& other) const;

 private:
  Eigen::VectorXd coords_;
};

/// Zone of width 2*half_width around the great sphere orthogonal to
/// `normal`: the set {p : |<p, normal>| <= sin(half_width)}. Requires
/// 0 < half_width < pi/2; the zone is the same object for normal and
/// -normal.
class Zone {
 public:
  Zone(UnitVector normal, Angle half_width);

  const UnitVector& normal() const { return normal_; }
  Angle half_width() const { return half_width_; }
  double width() const { return 2.0 * half_width_.radians; }
  Eigen::Index ambient_dim() const { return normal_.ambient_dim(); }

 private:
  UnitVector normal_;
  Angle half_width_;
};

/// A great sphere: the width-0 degenerate of a Zone, kept as its own type
/// so half_width = 0 never leaks into Zone.
class GreatSphere {
 public:
  explicit GreatSphere(UnitVector normal) : normal_(std::move(normal)) {}

  const UnitVector& normal() const { return normal_; }
  Eigen::Index ambient_dim() const { return normal_.ambient_dim(); }

  /// The zone of the given half-width around this great sphere.
  Zone thicken(Angle half_width) const { return Zone(normal_, half_width); }

 private:
  UnitVector normal_;
};

/// Spherical cap: points within spherical distance `radius` of `center`.
/// Radii in (0, pi] are storable; duality and merging restrict further at
/// the call site.
class Cap {
 public:
  Cap(UnitVector center, Angle radius);

  const UnitVector& center() const { return center_; }
  Angle radius() const { return radius_; }
  Eigen::Index ambient_dim() const { return center_.ambient_dim(); }

 private:
  UnitVector center_;
  Angle radius_;
};

/// A direction scaled by the sine of the originating half-width or radius:
/// the vector w_i = sin(alpha_i) * u_i.
class WeightedNormal {
 public:
  WeightedNormal(UnitVector direction, double weight);

  static WeightedNormal from_zone(const Zone& zone);
  static WeightedNormal from_cap(const Cap& cap);

  const UnitVector& direction() const { return direction_; }
  double weight() const { return weight_; }
  Eigen::VectorXd vector() const { return weight_ * direction_.coords(); }

 private:
  UnitVector direction_;
  double weight_;
};

enum class Membership { Inside, Boundary, Outside };

/// arccos of the clamped inner product, in [0, pi].
Angle angular_distance(const UnitVector& p, const UnitVector& q);

/// Spherical distance from p to the great sphere with the given normal:
/// arcsin(|<p, normal>|), in [0, pi/2].
double distance_to_great_sphere(const UnitVector& p, const UnitVector& normal);

/// Classifies by comparing |<p, n>| against sin(half_width); identical for
/// normal and -normal.
Membership zone_membership(const Zone& zone, const UnitVector& p,
                           double tol = kDefaultTolerance);

/// Classifies by comparing <p, center> against cos(radius).
Membership cap_membership(const Cap& cap, const UnitVector& p,
                          double tol = kDefaultTolerance);

/// Dual of a cap: the zone with normal = center, half_width = radius.
/// Requires radius < pi/2.
Zone dualize_cap(const Cap& cap);

/// Dual of a zone: of the pair of equal caps, the one on the side of the
/// stored normal. Preserves containment.
Cap dualize_zone(const Zone& zone);

}  // namespace zonecover
