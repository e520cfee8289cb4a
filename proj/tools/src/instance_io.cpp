#include "instance_io.hpp"

#include <cmath>

namespace zonecover::cli {

namespace {

using nlohmann::json;

double to_radians(double value, bool degrees) {
  return degrees ? value * M_PI / 180.0 : value;
}

double require_number(const json& node, const std::string& where) {
  if (!node.is_number()) {
    throw ParseError(where + ": expected a number");
  }
  return node.get<double>();
}

Eigen::VectorXd read_coordinates(const json& node, int expected_size,
                                 const std::string& where,
                                 std::vector<std::string>& warnings) {
  if (!node.is_array() || node.size() < 2) {
    throw ParseError(where + ": expected an array of at least 2 coordinates");
  }
  if (expected_size > 0 && static_cast<int>(node.size()) != expected_size) {
    throw ParseError(where + ": expected " + std::to_string(expected_size) +
                     " coordinates, got " + std::to_string(node.size()));
  }
  Eigen::VectorXd v(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] =
        require_number(node[i], where + "[" + std::to_string(i) + "]");
  }
  const double norm = v.norm();
  if (norm <= 0.0 || !v.allFinite()) {
    throw ParseError(where + ": coordinates do not form a usable direction");
  }
  if (std::abs(norm - 1.0) > 1e-6) {
    warnings.push_back(where + ": norm " + std::to_string(norm) +
                       " deviates from 1, normalized on load");
  }
  return v;
}

}  // namespace

LoadedInstance load_instance(const json& doc, bool degrees) {
  if (!doc.is_object()) {
    throw ParseError("top level: expected a JSON object");
  }

  // Unwrap a report produced by this tool.
  if (doc.contains("command") && doc.contains("instance")) {
    LoadedInstance loaded = load_instance(doc.at("instance"), degrees);
    if (doc.contains("result") && doc.at("result").is_object() &&
        doc.at("result").contains("witness")) {
      std::vector<std::string> ignored;
      loaded.witness = UnitVector(read_coordinates(
          doc.at("result").at("witness"), loaded.instance.dimension + 1,
          "result.witness", ignored));
    }
    return loaded;
  }

  if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer()) {
    throw ParseError("dimension: required integer field is missing");
  }
  LoadedInstance loaded;
  InstanceFile& instance = loaded.instance;
  instance.dimension = doc.at("dimension").get<int>();
  if (instance.dimension < 1) {
    throw ParseError("dimension: must be at least 1");
  }
  const int ambient = instance.dimension + 1;

  if (doc.contains("zones")) {
    if (!doc.at("zones").is_array()) {
      throw ParseError("zones: expected an array");
    }
    instance.has_zones = true;
    std::size_t i = 0;
    for (const json& z : doc.at("zones")) {
      const std::string where = "zones[" + std::to_string(i) + "]";
      if (!z.is_object() || !z.contains("normal") || !z.contains("width")) {
        throw ParseError(where + ": expected {normal, width}");
      }
      const double width =
          to_radians(require_number(z.at("width"), where + ".width"), degrees);
      if (width <= 0.0 || width >= M_PI) {
        throw ParseError(where + ".width: must lie in (0, pi)");
      }
      instance.zones.emplace_back(
          UnitVector(read_coordinates(z.at("normal"), ambient,
                                      where + ".normal", loaded.warnings)),
          Angle{width / 2.0});
      ++i;
    }
  }

  if (doc.contains("caps")) {
    if (!doc.at("caps").is_array()) {
      throw ParseError("caps: expected an array");
    }
    instance.has_caps = true;
    std::size_t i = 0;
    for (const json& c : doc.at("caps")) {
      const std::string where = "caps[" + std::to_string(i) + "]";
      if (!c.is_object() || !c.contains("center") || !c.contains("radius")) {
        throw ParseError(where + ": expected {center, radius}");
      }
      const double radius = to_radians(
          require_number(c.at("radius"), where + ".radius"), degrees);
      if (radius <= 0.0 || radius > M_PI) {
        throw ParseError(where + ".radius: must lie in (0, pi]");
      }
      instance.caps.emplace_back(
          UnitVector(read_coordinates(c.at("center"), ambient,
                                      where + ".center", loaded.warnings)),
          Angle{radius});
      ++i;
    }
  }

  if (doc.contains("great_spheres")) {
    if (!doc.at("great_spheres").is_array()) {
      throw ParseError("great_spheres: expected an array");
    }
    instance.has_great_spheres = true;
    std::size_t i = 0;
    for (const json& g : doc.at("great_spheres")) {
      const std::string where = "great_spheres[" + std::to_string(i) + "]";
      if (!g.is_object() || !g.contains("normal")) {
        throw ParseError(where + ": expected {normal}");
      }
      instance.great_spheres.emplace_back(
          UnitVector(read_coordinates(g.at("normal"), ambient,
                                      where + ".normal", loaded.warnings)));
      ++i;
    }
  }

  return loaded;
}

LoadedInstance parse_instance_text(const std::string& text, bool degrees) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("JSON parse error: ") + err.what());
  }
  return load_instance(doc, degrees);
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json zone_to_json(const Zone& zone) {
  return json{{"normal", vector_to_json(zone.normal().coords())},
              {"width", zone.width()}};
}

json cap_to_json(const Cap& cap) {
  return json{{"center", vector_to_json(cap.center().coords())},
              {"radius", cap.radius().radians}};
}

json instance_to_json(const InstanceFile& instance) {
  json out{{"dimension", instance.dimension}};
  if (instance.has_zones) {
    json zones = json::array();
    for (const Zone& zone : instance.zones) zones.push_back(zone_to_json(zone));
    out["zones"] = std::move(zones);
  }
  if (instance.has_caps) {
    json caps = json::array();
    for (const Cap& cap : instance.caps) caps.push_back(cap_to_json(cap));
    out["caps"] = std::move(caps);
  }
  if (instance.has_great_spheres) {
    json spheres = json::array();
    for (const GreatSphere& gs : instance.great_spheres) {
      spheres.push_back(json{{"normal", vector_to_json(gs.normal().coords())}});
    }
    out["great_spheres"] = std::move(spheres);
  }
  return out;
}

}  // namespace zonecover::cli
