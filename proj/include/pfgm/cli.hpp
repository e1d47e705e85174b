#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfgm/options.hpp"
#include "pfgm/weights.hpp"

namespace pfgm::cli {

/// Settings taken from the process environment rather than flags:
/// PFGM_WORK_CAP overrides both operation budgets, PFGM_THREADS sets the
/// worker count (results do not depend on it).
struct Environment {
  ComputeOptions options;

  static Environment from_process();
};

struct CommandResult {
  std::string command;
  std::optional<Complex> value_log;
  std::optional<Complex> value;
  /// Outer optional: field present. Inner nullopt: serialized as "none".
  std::optional<std::optional<double>> error_bound;
  std::optional<int> order;
  /// +infinity is serialized as "unbounded".
  std::optional<double> beta;
  nlohmann::json diagnostics = nlohmann::json::object();

  nlohmann::json to_json() const;
};

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kRefused = 2,
};

/// Runs one subcommand (args excludes the program name), writes a single JSON
/// document to `out` and warnings to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);

/// Parses a comma-separated list of integers such as "2,1".
std::vector<long long> parse_csv_integers(const std::string& text);

}  // namespace pfgm::cli
