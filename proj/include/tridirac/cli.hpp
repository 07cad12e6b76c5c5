#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tridirac/basis.hpp"

namespace tridirac::cli {

enum class Mode { Solve, Verify, Convergence, SpecialCase };

std::string to_string(Mode mode);

struct RunConfig {
  Mode mode = Mode::Solve;
  PhysicalParams phys;
  std::optional<double> omega;
  std::optional<double> alpha;
  std::optional<Representation> representation;
  int N = 20;
  int quad_order = 0;  // 0: smallest exact order
  int grid_points = 60;
  double x_min = 0.01;
  double x_max = 30.0;
  std::string out = ".";
  std::uint64_t seed = 20250101;

  BasisOptions basis_options() const;
  /// Throws ParameterError for inconsistent settings.
  void validate() const;
};

/// Applies one key=value setting. Unknown keys and unparsable values throw
/// ParameterError.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat key=value file ('#' starts a comment) on top of `config`.
void load_config_file(RunConfig& config, const std::string& path);

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  nlohmann::json json;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Runs the selected mode and writes its data files under config.out.
Report run(const RunConfig& config);

/// Full command-line entry point; returns the process exit code
/// (0 pass, 1 check failure, 2 configuration error).
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tridirac::cli
