#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gokit::cli {

/// Everything a run depends on; embedded verbatim in every report.
struct RunConfig {
  std::string command;
  std::string model_path;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  double alpha = 1.0;
  double beta = 1.0;
  std::string output;  // empty: standard output

  std::string p;
  std::string a0;
  std::string mu0;
  std::string h;
  std::string from_invariant;
  std::string csv;
  double dt = 1e-3;
  double t_end = 1.0;
  int max_iter = 10000;
  double step = 0.1;
  bool minimize = false;
  bool form_is_lagrangian = false;
  int verify = 100;
};

nlohmann::json config_to_json(const RunConfig& config);

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerdictNegative = 2,
  kNumericalFailure = 3,
};

struct CommandResult {
  nlohmann::json document;
  int exit_code = kOk;
  /// Printed to stderr when non-empty.
  std::string diagnostic;
};

/// Parses comma-separated decimals; throws InvalidInput naming `flag`.
std::vector<double> parse_coordinates(const std::string& text, const std::string& flag);

CommandResult run_command(const RunConfig& config);

}  // namespace gokit::cli
