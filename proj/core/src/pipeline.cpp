#include "zonecover/pipeline.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace zonecover {

namespace {

// Flip threshold: strictly positive and far above the rounding error of a
// single gain evaluation, so every executed flip increases the true |w|^2
// and the search cannot revisit a sign vector.
constexpr double kFlipGainEps = 1e-14;

constexpr int kMaxZonesForSubsetSearch = 20;

double total_width(const std::vector<Zone>& zones) {
  double width = 0.0;
  for (const Zone& zone : zones) width += zone.width();
  return width;
}

// First subset of [n], by cardinality then lexicographic order, whose
// weighted normals violate |sum w_i| <= sin(sum alpha_i) + tol. Empty when
// none exists.
std::vector<std::size_t> minimal_violating_subset(
    const std::vector<Zone>& zones, double tol) {
  const std::size_t n = zones.size();
  std::vector<Eigen::VectorXd> w(n);
  std::vector<double> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = WeightedNormal::from_zone(zones[i]).vector();
    alpha[i] = zones[i].half_width().radians;
  }

  std::vector<std::size_t> subset;
  // Enumerate k-subsets in lexicographic order for k = 1..n.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(w[0].size());
      double alpha_sum = 0.0;
      for (const std::size_t i : idx) {
        sum += w[i];
        alpha_sum += alpha[i];
      }
      if (sum.norm() > std::sin(alpha_sum) + tol) {
        return idx;
      }
      // Advance to the next k-subset.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {};
}

}  // namespace

SignState local_max_signs(const std::vector<WeightedNormal>& weighted,
                          std::vector<FlipEvent>* trace) {
  if (weighted.empty()) {
    throw InvalidArgument("local_max_signs needs at least one normal");
  }
  const Eigen::Index ambient = weighted.front().direction().ambient_dim();
  std::vector<Eigen::VectorXd> w_i(weighted.size());
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    if (weighted[i].direction().ambient_dim() != ambient) {
      throw DimensionMismatch("weighted normals of mixed dimension");
    }
    w_i[i] = weighted[i].vector();
  }

  std::vector<int> signs(weighted.size(), 1);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(ambient);
  for (const auto& v : w_i) w += v;

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < w_i.size(); ++i) {
      // Flipping sign i replaces w by w - 2 eps_i w_i; the gain in |w|^2 is
      // 4 (|w_i|^2 - eps_i <w, w_i>).
      const double gain =
          w_i[i].squaredNorm() - static_cast<double>(signs[i]) * w.dot(w_i[i]);
      if (gain > kFlipGainEps) {
        w -= 2.0 * static_cast<double>(signs[i]) * w_i[i];
        signs[i] = -signs[i];
        improved = true;
        if (trace != nullptr) {
          trace->push_back(FlipEvent{i, w.squaredNorm()});
        }
      }
    }
    // Recompute from the signs to keep w within roundoff of its definition.
    w = Eigen::VectorXd::Zero(ambient);
    for (std::size_t i = 0; i < w_i.size(); ++i) {
      w += static_cast<double>(signs[i]) * w_i[i];
    }
  }

  SignState state;
  state.signs = std::move(signs);
  state.norm = w.norm();
  state.w = std::move(w);
  return state;
}

WitnessReport find_witness(const std::vector<Zone>& zones, double tol) {
  if (zones.empty()) {
    throw InvalidArgument("find_witness needs at least one zone");
  }
  for (const Zone& zone : zones) {
    if (zone.ambient_dim() != zones.front().ambient_dim()) {
      throw DimensionMismatch("zones live in different ambient spaces");
    }
  }
  if (total_width(zones) >= M_PI - tol) {
    throw WidthBudgetExceeded("total zone width reaches pi; no witness claim");
  }
  if (zones.size() > kMaxZonesForSubsetSearch) {
    throw SubsetBoundExceeded("subset enumeration is capped at 20 zones");
  }

  std::vector<Zone> working = zones;
  std::vector<MergeStep> trace;
  int iterations = 0;

  const auto emit = [&](UnitVector witness) {
    std::vector<Angle> clearances;
    clearances.reserve(zones.size());
    for (const Zone& zone : zones) {
      const double clearance =
          distance_to_great_sphere(witness, zone.normal()) -
          zone.half_width().radians;
      if (clearance < -tol) {
        throw NumericalStall(
            "witness clearance against an original zone is negative");
      }
      clearances.push_back(Angle{clearance});
    }
    return WitnessReport{std::move(witness), std::move(clearances),
                         std::move(trace), iterations};
  };

  while (true) {
    ++iterations;
    if (working.size() == 1) {
      // A single zone never covers: |w| = sin(half_width) < 1 identically,
      // and w/|w| is the zone's pole.
      return emit(working.front().normal());
    }

    std::vector<WeightedNormal> weighted;
    weighted.reserve(working.size());
    for (const Zone& zone : working) {
      weighted.push_back(WeightedNormal::from_zone(zone));
    }
    const SignState state = local_max_signs(weighted);

    if (state.norm < 1.0 - tol) {
      return emit(UnitVector(Eigen::VectorXd(state.w)));
    }

    // |w| >= 1 - tol: flip normals so all signs are +1 (zones are unchanged
    // under normal negation) and merge a minimal violating subset.
    std::vector<Zone> oriented;
    oriented.reserve(working.size());
    for (std::size_t i = 0; i < working.size(); ++i) {
      oriented.emplace_back(state.signs[i] > 0
                                ? working[i].normal()
                                : working[i].normal().antipode(),
                            working[i].half_width());
    }
    const std::vector<std::size_t> subset =
        minimal_violating_subset(oriented, tol);
    if (subset.empty()) {
      throw NumericalStall(
          "|w| sits within tolerance of 1 and no violating subset exists");
    }

    std::vector<Cap> caps;
    caps.reserve(subset.size());
    for (const std::size_t i : subset) {
      caps.push_back(dualize_zone(oriented[i]));
    }
    MergeCertificate certificate = merge_caps(caps, tol);
    Zone replacement = dualize_cap(certificate.merged);

    std::vector<Zone> next;
    next.reserve(working.size() - subset.size() + 1);
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < working.size(); ++i) {
      if (cursor < subset.size() && subset[cursor] == i) {
        if (cursor == 0) next.push_back(replacement);
        ++cursor;
      } else {
        next.push_back(working[i]);
      }
    }
    trace.push_back(MergeStep{subset, std::move(replacement),
                              std::move(certificate)});
    working = std::move(next);
  }
}

RefutationOutcome refute_or_report(const std::vector<Zone>& zones,
                                   double tol) {
  const double width = total_width(zones);
  if (width < M_PI - tol) {
    return find_witness(zones, tol);
  }
  return TotalWidthAtLeastPi{width};
}

}  // namespace zonecover
