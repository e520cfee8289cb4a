#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zonecover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotApplicable = 2;

struct Options {
  std::string command;
  std::string instance_path;  // "-" reads standard input
  double tol = 1e-9;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::string svg_path;
  bool trace = false;
  bool degrees = false;
  std::size_t max_uncovered = 16;
  std::string method = "sampling";  // verify: sampling | exact-circle | arrangement

  // generate-tight
  int tight_n = 0;
  bool tight_equal = false;
  std::vector<double> tight_widths;  // full widths, radians
  int tight_dimension = 2;
  std::string out_path;
};

/// Runs one command, writes the JSON report to `out`, and returns the
/// process exit code (0 ok, 2 not-applicable, 1 error).
int run_command(const Options& options, std::ostream& out, std::ostream& err);

}  // namespace zonecover::cli
