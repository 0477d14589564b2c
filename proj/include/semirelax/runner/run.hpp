#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "semirelax/diagnostics/identities.hpp"
#include "semirelax/runner/config.hpp"

namespace semirelax::runner {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Headline number of the check (relative residual, ratio or constant).
  double value = 0.0;
  /// Full JSON report written to <check>.json.
  std::string json;
};

struct RunOptions {
  std::filesystem::path out_dir = "out";
  /// Omits wall-clock time so repeated runs give byte-identical files.
  bool deterministic = false;
  bool plots = false;
  /// Also writes the trajectories (snapshot files) under trajectory/.
  bool save_trajectory = false;
};

struct RunReport {
  Scenario scenario;
  /// Output directory of this run: out_dir / scenario.name.
  std::filesystem::path directory;
  std::filesystem::path csv;
  std::vector<diagnostics::DiagnosticsRow> rows;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool passed() const;
  std::string to_json(bool include_wall_time) const;
};

/// JSON echo of every scenario parameter.
std::string scenario_json(const Scenario& sc);

/// Evolves the scenario with its solver(s), evaluates every requested check
/// and writes diagnostics.csv, <check>.json and report.json into
/// out_dir / scenario.name. Solver failures are rethrown with the scenario
/// name prepended (NumericalError keeps its step index). A check whose
/// evaluation throws is recorded as failed with the error message.
RunReport run(const Scenario& sc, const RunOptions& options);

}  // namespace semirelax::runner
