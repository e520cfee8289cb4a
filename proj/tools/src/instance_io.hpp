#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonecover/geometry.hpp"

namespace zonecover::cli {

/// Malformed instance or report file; the message carries the offending
/// field or parse location.
struct ParseError : Error {
  using Error::Error;
};

/// In-memory form of an instance file. Sections are optional; each command
/// checks for the ones it needs.
struct InstanceFile {
  int dimension = 0;  // sphere dimension d; coordinates have d+1 entries
  std::vector<Zone> zones;
  std::vector<Cap> caps;
  std::vector<GreatSphere> great_spheres;
  bool has_zones = false;
  bool has_caps = false;
  bool has_great_spheres = false;
};

struct LoadedInstance {
  InstanceFile instance;
  std::vector<std::string> warnings;
  /// Set when the input was a refute report: its witness, for re-checks.
  std::optional<UnitVector> witness;
};

/// Parses an instance file, or a report emitted by this tool (the embedded
/// instance is unwrapped and a witness, if present, is surfaced).
/// Coordinates are normalized on load, with a warning when the input norm
/// is off unity by more than 1e-6. Angles are radians unless `degrees`.
LoadedInstance load_instance(const nlohmann::json& doc, bool degrees);
LoadedInstance parse_instance_text(const std::string& text, bool degrees);

nlohmann::json instance_to_json(const InstanceFile& instance);

nlohmann::json vector_to_json(const Eigen::VectorXd& v);
nlohmann::json zone_to_json(const Zone& zone);
nlohmann::json cap_to_json(const Cap& cap);

}  // namespace zonecover::cli
