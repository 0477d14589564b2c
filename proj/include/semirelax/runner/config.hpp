#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semirelax::runner {

enum class Solver { spectral, radial_wave, both };

/// Well-posedness regime a scenario claims to sit in; checked at load time.
///  h1_global_1d           n = 1, p > 1
///  h1_global_2d           n = 2, p > 1
///  hs_local_2d            n = 2, p > 1, 3/4 < s < p
///  radial_subcritical     n = 3, radial data, 1 < p < 1 + 2/(n-2) = 3
///  radial_critical_small  n = 3, radial data, p = 3, ||u0||_{H^1} <= h1_bound
enum class Regime { none, h1_global_1d, h1_global_2d, hs_local_2d, radial_subcritical, radial_critical_small };

struct DataSpec {
  enum class Kind { gaussian, mode, file };
  Kind kind = Kind::gaussian;
  double amplitude = 1.0;
  double width = 1.0;
  /// Offset of the Gaussian centre along the first axis.
  double center = 0.0;
  int mode = 1;
  std::filesystem::path path;

  std::string str() const;
};

struct Scenario {
  std::string name;
  int n = 1;
  double p = 3.0;
  double s = 1.0;
  int N = 256;
  double L = 40.0;
  int M = 512;
  double R = 20.0;
  DataSpec data;
  double dt = 1e-3;
  double T = 1.0;
  /// Spectral snapshot stride; radial runs keep every step.
  int stride = 1;
  bool dealias = true;
  std::vector<std::string> checks;
  Solver solver = Solver::spectral;
  Regime regime = Regime::none;
  double h1_bound = 0.1;
  /// Probe parameters for the weighted Strichartz ratio.
  double delta = 0.5;
  double q1 = 4.0;
  /// Per-check thresholds, keyed by check name (tol.<check> in the file).
  std::map<std::string, double> tolerances;

  double tolerance(const std::string& check) const;
  bool has_check(const std::string& check) const;
  bool uses_spectral() const { return solver != Solver::radial_wave; }
  bool uses_radial() const { return solver != Solver::spectral; }
};

const std::vector<std::string>& known_checks();
std::string to_string(Solver s);
std::string to_string(Regime r);

/// Parses `[scenario.<name>]` sections of `key = value` lines. '#' starts a
/// comment. Relative file(...) paths resolve against `base_dir`. Throws
/// ParseError with the line number on syntax errors or unknown keys and
/// HypothesisError when a scenario violates its regime or a check's
/// hypotheses. Returns scenarios in file order.
std::vector<Scenario> parse_config(std::istream& is, const std::filesystem::path& base_dir = {});
std::vector<Scenario> load_config(const std::filesystem::path& path);

/// Throws HypothesisError describing the violated hypothesis.
void validate(const Scenario& sc);

/// Applies one `key = value` assignment (same keys as the file grammar).
/// Throws std::invalid_argument on unknown keys or bad values.
void assign(Scenario& sc, const std::string& key, const std::string& value, const std::filesystem::path& base_dir = {});

}  // namespace semirelax::runner
