#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "zonecover/geometry.hpp"

using namespace zonecover;

namespace {

UnitVector e(int ambient, int i) { return UnitVector::axis(ambient, i); }

}  // namespace

TEST_CASE("unit vectors normalize and validate") {
  Eigen::VectorXd raw(3);
  raw << 3.0, 0.0, 4.0;
  const UnitVector u{raw};
  CHECK(u.coords().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u.coords()[0] == doctest::Approx(0.6));

  CHECK_THROWS_AS(UnitVector(Eigen::VectorXd::Zero(3)), InvalidArgument);
  Eigen::VectorXd one(1);
  one << 1.0;
  CHECK_THROWS_AS(UnitVector(one), InvalidArgument);
}

TEST_CASE("angular distance identity, antipodal, orthogonal") {
  const UnitVector p = e(3, 0);
  CHECK(angular_distance(p, p).radians == doctest::Approx(0.0));
  CHECK(angular_distance(p, p.antipode()).radians == doctest::Approx(M_PI));
  CHECK(angular_distance(e(3, 0), e(3, 1)).radians ==
        doctest::Approx(M_PI / 2.0));

  Eigen::VectorXd other(4);
  other << 1, 0, 0, 0;
  CHECK_THROWS_AS(angular_distance(p, UnitVector(other)), DimensionMismatch);
}

TEST_CASE("angular distance obeys the triangle inequality") {
  zctest::Rng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const int ambient = 2 + static_cast<int>(trial % 4);
    const UnitVector a = zctest::random_unit(rng, ambient);
    const UnitVector b = zctest::random_unit(rng, ambient);
    const UnitVector c = zctest::random_unit(rng, ambient);
    const double ab = angular_distance(a, b).radians;
    const double bc = angular_distance(b, c).radians;
    const double ac = angular_distance(a, c).radians;
    REQUIRE(ac <= ab + bc + 1e-9);
  }
}

TEST_CASE("zone construction rejects degenerate widths") {
  CHECK_THROWS_AS(Zone(e(3, 2), Angle{0.0}), InvalidArgument);
  CHECK_THROWS_AS(Zone(e(3, 2), Angle{M_PI / 2.0}), InvalidArgument);
  CHECK_THROWS_AS(Zone(e(3, 2), Angle{-0.1}), InvalidArgument);
  const Zone z(e(3, 2), Angle{0.3});
  CHECK(z.width() == doctest::Approx(0.6));
}

TEST_CASE("zone membership classifies against sin(half-width)") {
  const Zone zone(e(3, 2), Angle{M_PI / 6.0});

  // Point on the central great circle.
  CHECK(zone_membership(zone, e(3, 0)) == Membership::Inside);
  // The pole sits at distance pi/2 > pi/6.
  CHECK(zone_membership(zone, e(3, 2)) == Membership::Outside);

  // |<p, e3>| = sin(pi/6) exactly.
  Eigen::VectorXd boundary(3);
  boundary << std::cos(M_PI / 6.0), 0.0, std::sin(M_PI / 6.0);
  CHECK(zone_membership(zone, UnitVector(boundary)) == Membership::Boundary);
}

TEST_CASE("zone membership is antipodally symmetric and normal-sign blind") {
  zctest::Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int ambient = 2 + static_cast<int>(trial % 3);
    const UnitVector n = zctest::random_unit(rng, ambient);
    std::uniform_real_distribution<double> width(0.05, 1.5);
    const Zone zone(n, Angle{width(rng)});
    const Zone flipped(n.antipode(), zone.half_width());
    const UnitVector p = zctest::random_unit(rng, ambient);
    const Membership m = zone_membership(zone, p);
    REQUIRE(zone_membership(zone, p.antipode()) == m);
    REQUIRE(zone_membership(flipped, p) == m);
  }
}

TEST_CASE("cap membership compares against cos(radius)") {
  const Cap cap(e(3, 0), Angle{M_PI / 4.0});
  CHECK(cap_membership(cap, e(3, 0)) == Membership::Inside);
  CHECK(cap_membership(cap, e(3, 0).antipode()) == Membership::Outside);

  Eigen::VectorXd rim(3);
  rim << std::cos(M_PI / 4.0), std::sin(M_PI / 4.0), 0.0;
  CHECK(cap_membership(cap, UnitVector(rim)) == Membership::Boundary);
}

TEST_CASE("duality swaps caps and zones definitionally") {
  const Zone dual = dualize_cap(Cap(e(3, 0), Angle{M_PI / 6.0}));
  CHECK(dual.normal().coords() == e(3, 0).coords());
  CHECK(dual.half_width().radians == M_PI / 6.0);

  const Zone dual2 = dualize_cap(Cap(e(3, 1), Angle{0.3}));
  CHECK(dual2.normal().coords() == e(3, 1).coords());
  CHECK(dual2.half_width().radians == 0.3);

  const Cap back = dualize_zone(Zone(e(3, 2), Angle{M_PI / 4.0}));
  CHECK(back.center().coords() == e(3, 2).coords());
  CHECK(back.radius().radians == M_PI / 4.0);

  CHECK_THROWS_AS(dualize_cap(Cap(e(3, 0), Angle{M_PI / 2.0})),
                  InvalidArgument);
}

TEST_CASE("dual caps of opposite normals differ exactly by antipody") {
  const Cap plus = dualize_zone(Zone(e(3, 2), Angle{M_PI / 4.0}));
  const Cap minus = dualize_zone(Zone(e(3, 2).antipode(), Angle{M_PI / 4.0}));
  CHECK(minus.center().coords() == plus.center().antipode().coords());
  CHECK(minus.radius().radians == plus.radius().radians);
}

TEST_CASE("dualize round-trip is bit-exact on stored fields") {
  zctest::Rng rng(99);
  std::uniform_real_distribution<double> radius(0.01, M_PI / 2.0 - 0.01);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cap cap(zctest::random_unit(rng, 3 + trial % 2), Angle{radius(rng)});
    const Cap round = dualize_zone(dualize_cap(cap));
    REQUIRE(round.center().coords() == cap.center().coords());
    REQUIRE(round.radius().radians == cap.radius().radians);
  }
}

TEST_CASE("duality preserves containment (sampled)") {
  zctest::Rng rng(123);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    // Build nested caps: inner center within the outer, radii so that
    // dist + r_inner <= r_outer.
    const UnitVector outer_center = zctest::random_unit(rng, 3);
    const double r_outer = 0.3 + unit(rng) * (M_PI / 2.0 - 0.35);
    const double shift = unit(rng) * r_outer * 0.5;
    const double r_inner = (r_outer - shift) * (0.2 + 0.8 * unit(rng));
    const UnitVector inner_center =
        zctest::point_at_distance(rng, outer_center, shift);
    const Cap inner(inner_center, Angle{r_inner});
    const Cap outer(outer_center, Angle{r_outer});

    const Zone inner_zone = dualize_cap(inner);
    const Zone outer_zone = dualize_cap(outer);

    // Sample the inner zone: points at distance s <= r_inner from the
    // inner great sphere.
    for (int k = 0; k < 20; ++k) {
      const UnitVector on_sphere =
          zctest::random_orthogonal(rng, inner_zone.normal());
      const double s = unit(rng) * r_inner;
      const double side = unit(rng) < 0.5 ? -1.0 : 1.0;
      const UnitVector p{std::cos(s) * on_sphere.coords() +
                         side * std::sin(s) * inner_zone.normal().coords()};
      REQUIRE(zone_membership(inner_zone, p) != Membership::Outside);
      REQUIRE(zone_membership(outer_zone, p) != Membership::Outside);
    }
  }
}

TEST_CASE("|<p,n>| equals sin of the distance to the great sphere") {
  zctest::Rng rng(5150);
  for (int trial = 0; trial < 10000; ++trial) {
    const int ambient = 2 + trial % 3;
    const UnitVector p = zctest::random_unit(rng, ambient);
    const UnitVector n = zctest::random_unit(rng, ambient);
    // Distance to the great sphere via arccos: pi/2 minus the distance to
    // the nearer of the two poles.
    const double via_arccos =
        M_PI / 2.0 - std::min(angular_distance(p, n).radians,
                              angular_distance(p, n.antipode()).radians);
    REQUIRE(std::abs(std::sin(distance_to_great_sphere(p, n)) -
                     std::sin(via_arccos)) < 1e-10);
    REQUIRE(std::abs(std::abs(p.dot(n)) - std::sin(via_arccos)) < 1e-10);
  }
}

TEST_CASE("weighted normals carry the sine of the generating angle") {
  const Zone zone(e(3, 1), Angle{0.4});
  const WeightedNormal wn = WeightedNormal::from_zone(zone);
  CHECK(wn.weight() == doctest::Approx(std::sin(0.4)).epsilon(1e-12));
  CHECK(wn.vector().norm() == doctest::Approx(std::sin(0.4)).epsilon(1e-12));

  const Cap cap(e(4, 2), Angle{0.25});
  CHECK(WeightedNormal::from_cap(cap).weight() ==
        doctest::Approx(std::sin(0.25)).epsilon(1e-12));

  CHECK_THROWS_AS(WeightedNormal(e(3, 0), 0.0), InvalidArgument);
  CHECK_THROWS_AS(WeightedNormal(e(3, 0), 1.5), InvalidArgument);
}

TEST_CASE("great spheres thicken into zones around themselves") {
  const GreatSphere gs(e(3, 2));
  const Zone zone = gs.thicken(Angle{0.2});
  CHECK(zone.normal().coords() == gs.normal().coords());
  CHECK(zone.half_width().radians == 0.2);
}
