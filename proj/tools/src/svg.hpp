#pragma once

#include <string>
#include <vector>

#include "zonecover/geometry.hpp"

namespace zonecover::cli {

/// Orthographic plot of an S^2 instance seen from +z: the sphere outline,
/// each zone's two boundary circles (dashed on the hidden hemisphere), and
/// marked points. Throws WrongDimension unless everything lives in R^3.
std::string render_svg(const std::vector<Zone>& zones,
                       const std::vector<UnitVector>& points);

void write_svg_file(const std::string& path, const std::vector<Zone>& zones,
                    const std::vector<UnitVector>& points);

}  // namespace zonecover::cli
