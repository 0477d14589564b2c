#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "semirelax/runner/run.hpp"

namespace semirelax::runner {

/// One swept parameter: dt, N, amplitude or sigma. sigma rescales the
/// scenario by u0 -> sigma^{1/(p-1)} u0(sigma x), shrinking L, R, dt and T
/// by sigma so the rescaled run is the exact image of the original.
struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

/// Parses "key=v1,v2,...". Throws std::invalid_argument.
SweepAxis parse_axis(const std::string& spec);

struct SweepOptions {
  RunOptions run;
  /// Worker threads; 0 means min(SEMIRELAX_THREADS or hardware threads, members).
  int threads = 0;
};

struct SweepMember {
  std::vector<std::pair<std::string, double>> params;
  Scenario scenario;
  std::optional<RunReport> report;
  /// Set when the member failed to run (the sweep continues).
  std::string error;
  bool passed() const { return report && report->passed(); }
};

struct SweepResult {
  std::vector<SweepMember> members;
  std::filesystem::path aggregate;
  bool passed() const;
};

/// Number of worker threads allowed by SEMIRELAX_THREADS (default: hardware).
int thread_cap();

/// Applies one swept value to a scenario (also renames nothing).
void apply(Scenario& sc, const std::string& key, double value);

/// Runs the Cartesian product of the axes (first axis varies slowest),
/// concurrently, and writes sweep_<name>.json into out_dir with convergence
/// orders of the final identity residuals (dt and N axes), stability of the
/// empirical constants across members, and the largest passing amplitude
/// (amplitude axis). Members are written to out_dir / <name>_<label>.
SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes, const SweepOptions& options);

struct BisectionResult {
  double largest_stable = 0.0;
  double smallest_unstable = 0.0;
  std::vector<std::pair<double, bool>> probes;
};

/// Bisects the data amplitude between a passing `lo` and a failing `hi`.
/// A probe is stable when the run completes and all checks pass; the
/// regime's smallness bound is lifted so the solver itself decides.
BisectionResult bisect_amplitude(const Scenario& base, double lo, double hi, int iterations, const RunOptions& options);

}  // namespace semirelax::runner
