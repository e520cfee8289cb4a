#include "svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace zonecover::cli {

namespace {

constexpr int kSize = 640;
constexpr double kScale = 0.46 * kSize;

void move_or_line(std::ostringstream& path, bool& pen_down, double x,
                  double y) {
  const double px = kSize / 2.0 + kScale * x;
  const double py = kSize / 2.0 - kScale * y;
  path << (pen_down ? " L " : "M ") << px << ' ' << py;
  pen_down = true;
}

// Polyline pieces of the boundary circle <p, n> = h, split into the
// visible (z >= 0) and hidden halves.
void circle_paths(const Eigen::Vector3d& n, double h, std::ostringstream& out,
                  const std::string& color) {
  Eigen::Vector3d e = std::abs(n.z()) < 0.9 ? Eigen::Vector3d::UnitZ()
                                            : Eigen::Vector3d::UnitX();
  const Eigen::Vector3d u = n.cross(e).normalized();
  const Eigen::Vector3d v = n.cross(u).normalized();
  const double rho = std::sqrt(std::max(0.0, 1.0 - h * h));

  for (const bool visible : {true, false}) {
    std::ostringstream path;
    bool pen_down = false;
    constexpr int kSteps = 256;
    for (int i = 0; i <= kSteps; ++i) {
      const double t = 2.0 * M_PI * static_cast<double>(i) / kSteps;
      const Eigen::Vector3d p =
          h * n + rho * (std::cos(t) * u + std::sin(t) * v);
      if ((p.z() >= 0.0) == visible) {
        move_or_line(path, pen_down, p.x(), p.y());
      } else {
        pen_down = false;
      }
    }
    const std::string d = path.str();
    if (!d.empty()) {
      out << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.2\""
          << (visible ? "" : " stroke-dasharray=\"4 4\" opacity=\"0.5\"")
          << "/>\n";
    }
  }
}

}  // namespace

std::string render_svg(const std::vector<Zone>& zones,
                       const std::vector<UnitVector>& points) {
  for (const Zone& zone : zones) {
    if (zone.ambient_dim() != 3) {
      throw WrongDimension("SVG plots are available for d = 2 only");
    }
  }
  for (const UnitVector& p : points) {
    if (p.ambient_dim() != 3) {
      throw WrongDimension("SVG plots are available for d = 2 only");
    }
  }

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' '
      << kSize << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <circle cx=\"" << kSize / 2.0 << "\" cy=\"" << kSize / 2.0
      << "\" r=\"" << kScale << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < zones.size(); ++i) {
    const std::string color = kColors[i % (sizeof(kColors) / sizeof(char*))];
    const Eigen::Vector3d n = zones[i].normal().coords().head<3>();
    const double h = std::sin(zones[i].half_width().radians);
    circle_paths(n, h, out, color);
    circle_paths(n, -h, out, color);
  }

  for (const UnitVector& p : points) {
    const Eigen::Vector3d v = p.coords().head<3>();
    const double px = kSize / 2.0 + kScale * v.x();
    const double py = kSize / 2.0 - kScale * v.y();
    out << "  <circle cx=\"" << px << "\" cy=\"" << py
        << "\" r=\"4\" fill=\"" << (v.z() >= 0.0 ? "#d62728" : "#f5a0a0")
        << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg_file(const std::string& path, const std::vector<Zone>& zones,
                    const std::vector<UnitVector>& points) {
  std::ofstream file(path);
  if (!file) {
    throw Error("cannot open SVG output file: " + path);
  }
  file << render_svg(zones, points);
}

}  // namespace zonecover::cli
