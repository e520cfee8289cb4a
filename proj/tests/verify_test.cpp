#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "zonecover/constructions.hpp"
#include "zonecover/covering.hpp"
#include "zonecover/pipeline.hpp"
#include "zonecover/verify.hpp"

using namespace zonecover;

namespace {

UnitVector e(int ambient, int i) { return UnitVector::axis(ambient, i); }

UnitVector circle_point(double phi) {
  Eigen::VectorXd v(2);
  v << std::cos(phi), std::sin(phi);
  return UnitVector(std::move(v));
}

}  // namespace

TEST_CASE("sphere samples are unit and pairwise distinct") {
  const std::vector<UnitVector> pts = sample_sphere(2, 4);
  REQUIRE(pts.size() == 4);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    REQUIRE(pts[i].coords().norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      REQUIRE((pts[i].coords() - pts[j].coords()).norm() > 1e-6);
    }
  }
}

TEST_CASE("circle samples sit at equal angles") {
  const std::vector<UnitVector> pts = sample_sphere(1, 8);
  REQUIRE(pts.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const double phi = 2.0 * M_PI * static_cast<double>(i) / 8.0;
    REQUIRE((pts[i].coords() - circle_point(phi).coords()).norm() < 1e-12);
  }
}

TEST_CASE("seeded gaussian samples are reproducible byte for byte") {
  const std::vector<UnitVector> a = sample_sphere(3, 1000, 42);
  const std::vector<UnitVector> b = sample_sphere(3, 1000, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].coords() == b[i].coords());
  }
  const std::vector<UnitVector> c = sample_sphere(3, 10, 43);
  CHECK(c[0].coords() != a[0].coords());
}

TEST_CASE("verify_covering flags the poles of a single fat zone") {
  const Zone zone(e(3, 2), Angle{(M_PI - 1e-6) / 2.0});
  const std::vector<UnitVector> poles = {e(3, 2), e(3, 2).antipode()};
  const CoverageReport report = verify_covering({zone}, poles, 1e-9);
  CHECK(report.uncovered_count == 2);
  CHECK(report.min_margin > 1e-9);
  CHECK_FALSE(report.covered());
}

TEST_CASE("verify_covering accepts the tight three-zone cover") {
  const std::vector<Zone> zones = tight_configuration(
      std::vector<Angle>(3, Angle{M_PI / 6.0}), 2);
  const CoverageReport report =
      verify_covering(zones, sample_sphere(2, 100000), 1e-9);
  CHECK(report.covered());
  CHECK(report.uncovered_count == 0);
  CHECK(report.min_margin <= 1e-9);
}

TEST_CASE("a pipeline witness inserted among samples is reported uncovered") {
  zctest::Rng rng(903);
  const std::vector<Zone> zones = zctest::random_zones(rng, 4, 3, 2.6);
  const WitnessReport witness = find_witness(zones);

  std::vector<UnitVector> samples = sample_sphere(2, 500);
  samples.push_back(witness.witness);
  const CoverageReport report = verify_covering(zones, samples, 1e-9, 600);
  REQUIRE_FALSE(report.covered());
  bool found = false;
  for (const UnitVector& p : report.uncovered) {
    if ((p.coords() - witness.witness.coords()).norm() < 1e-12) found = true;
  }
  CHECK(found);
}

TEST_CASE("exact circle decision: orthogonal pi/4 zones tile S^1") {
  const std::vector<Zone> zones = {Zone(e(2, 0), Angle{M_PI / 4.0}),
                                   Zone(e(2, 1), Angle{M_PI / 4.0})};
  const CoverageReport report = exact_cover_circle(zones, 1e-9);
  CHECK(report.covered());
  CHECK(report.method == CoverageMethod::ExactCircle);
}

TEST_CASE("exact circle decision: shaved zones leave four gaps") {
  const std::vector<Zone> zones = {Zone(e(2, 0), Angle{M_PI / 4.0 - 0.01}),
                                   Zone(e(2, 1), Angle{M_PI / 4.0 - 0.01})};
  const CoverageReport report = exact_cover_circle(zones, 1e-9);
  REQUIRE_FALSE(report.covered());
  CHECK(report.uncovered_count == 4);

  // The pipeline's witness sits in one of the reported gaps.
  const WitnessReport witness = find_witness(zones);
  double nearest = M_PI;
  for (const UnitVector& gap : report.uncovered) {
    nearest = std::min(nearest,
                       angular_distance(gap, witness.witness).radians);
  }
  CHECK(nearest <= 0.011);
}

TEST_CASE("exact circle decision: single zone leaves both polar gaps") {
  const std::vector<Zone> zones = {Zone(circle_point(0.3), Angle{0.5})};
  const CoverageReport report = exact_cover_circle(zones, 1e-9);
  REQUIRE(report.uncovered_count == 2);
  // Gap midpoints are the zone's poles.
  for (const UnitVector& p : report.uncovered) {
    const double to_pole =
        std::min(angular_distance(p, zones[0].normal()).radians,
                 angular_distance(p, zones[0].normal().antipode()).radians);
    REQUIRE(to_pole < 1e-9);
  }
}

TEST_CASE("exact circle agrees with the witness pipeline on random instances") {
  zctest::Rng rng(555);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_real_distribution<double> total(0.3, M_PI - 0.01);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Zone> zones =
        zctest::random_zones(rng, count(rng), 2, total(rng));
    const WitnessReport witness = find_witness(zones);
    const CoverageReport exact = exact_cover_circle(zones, 1e-9);
    REQUIRE_FALSE(exact.covered());
    // The witness itself must land outside every zone, like the gaps.
    for (const Zone& zone : zones) {
      REQUIRE(zone_membership(zone, witness.witness, 1e-9) !=
              Membership::Inside);
    }
  }
}

TEST_CASE("arrangement candidates include the orthogonal intersections") {
  const std::vector<Zone> zones = {Zone(e(3, 0), Angle{M_PI / 4.0}),
                                   Zone(e(3, 1), Angle{M_PI / 4.0})};
  const std::vector<UnitVector> candidates = arrangement_candidates_s2(zones);

  const double s = std::sin(M_PI / 4.0);
  int hits = 0;
  for (const double sx : {1.0, -1.0}) {
    for (const double sy : {1.0, -1.0}) {
      Eigen::VectorXd expected(3);
      expected << sx * s, sy * s, 0.0;
      for (const UnitVector& c : candidates) {
        if ((c.coords() - expected).norm() < 1e-9) {
          ++hits;
          break;
        }
      }
    }
  }
  CHECK(hits == 4);

  // Two orthogonal width-pi/2 zones cover S^2; every candidate at worst
  // touches a boundary.
  const CoverageReport report = verify_covering(zones, candidates, 1e-9);
  CHECK(report.covered());
}

TEST_CASE("arrangement candidates certify tightness and detect shaving") {
  const std::vector<Zone> tight = tight_configuration(
      std::vector<Angle>(3, Angle{M_PI / 6.0}), 2);
  CHECK(verify_covering(tight, arrangement_candidates_s2(tight), 1e-9)
            .covered());

  std::vector<Zone> shaved;
  for (const Zone& zone : tight) {
    shaved.emplace_back(zone.normal(), Angle{M_PI / 6.0 - 0.01});
  }
  const CoverageReport report =
      verify_covering(shaved, arrangement_candidates_s2(shaved), 1e-9);
  CHECK_FALSE(report.covered());
  CHECK(std::holds_alternative<WitnessReport>(refute_or_report(shaved)));
}

TEST_CASE("wrong dimensions are rejected by the S^1 and S^2 oracles") {
  CHECK_THROWS_AS(exact_cover_circle({Zone(e(3, 0), Angle{0.3})}),
                  WrongDimension);
  CHECK_THROWS_AS(arrangement_candidates_s2({Zone(e(4, 0), Angle{0.3})}),
                  WrongDimension);
  CHECK_THROWS_AS(brute_force_min_cap({Cap(e(4, 0), Angle{0.3})}, 500),
                  WrongDimension);
}

TEST_CASE("brute-force minimal cap approximates the inputs") {
  // Single cap: recovered within grid resolution.
  const Cap lone(e(3, 0), Angle{0.4});
  const Cap best1 = brute_force_min_cap({lone}, 20000);
  CHECK(std::abs(best1.radius().radians - 0.4) < 0.05);

  // Concentric caps: the lemma budget 0.5 is beaten; the true optimum is 0.3.
  const std::vector<Cap> concentric = {Cap(e(3, 0), Angle{0.2}),
                                       Cap(e(3, 0), Angle{0.3})};
  const Cap best2 = brute_force_min_cap(concentric, 20000);
  CHECK(best2.radius().radians < 0.4);
  CHECK(std::abs(best2.radius().radians - 0.3) < 0.05);

  // Tangent caps: the lemma budget is optimal up to resolution.
  Eigen::VectorXd u2(3);
  u2 << std::cos(0.7), std::sin(0.7), 0.0;
  const std::vector<Cap> tangent = {Cap(e(3, 0), Angle{0.3}),
                                    Cap(UnitVector(u2), Angle{0.4})};
  const Cap best3 = brute_force_min_cap(tangent, 20000);
  const MergeCertificate cert = merge_caps(tangent);
  CHECK(best3.radius().radians <= cert.merged.radius().radians + 0.05);
  CHECK(best3.radius().radians >= cert.merged.radius().radians - 0.05);
}
