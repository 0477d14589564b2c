#include "semirelax/runner/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "semirelax/diagnostics/exponents.hpp"
#include "semirelax/diagnostics/probes.hpp"
#include "semirelax/diagnostics/radial_identities.hpp"
#include "semirelax/errors.hpp"
#include "semirelax/propagator/stepper.hpp"
#include "semirelax/propagator/trajectory_io.hpp"
#include "semirelax/radial/equivalence.hpp"
#include "semirelax/radial/maximal.hpp"
#include "semirelax/radial/profile_io.hpp"
#include "semirelax/radial/wave_solver.hpp"
#include "semirelax/runner/initial_data.hpp"
#include "semirelax/runner/plots.hpp"
#include "semirelax/spectral/norms.hpp"

namespace semirelax::runner {

using json = nlohmann::ordered_json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string strip_step_prefix(const std::string& what) {
  if (what.rfind("step ", 0) == 0)
    if (auto colon = what.find(": "); colon != std::string::npos) return what.substr(colon + 2);
  return what;
}

// Everything a check may look at.
struct RunState {
  const Scenario& sc;
  std::optional<spectral::Field> u0;
  std::optional<radial::RadialProfile> f0;
  std::optional<propagator::Trajectory> traj;
  std::optional<radial::RadialTrajectory> rtraj;
  std::vector<diagnostics::DiagnosticsRow> rows;
};

json identity_json(const diagnostics::IdentityResidual& r) { return json::parse(diagnostics::to_json(r)); }
json bound_json(const diagnostics::BoundReport& b) { return json::parse(b.to_json()); }

CheckResult finish(const std::string& name, bool passed, double value, json body) {
  json j;
  j["check"] = name;
  j["passed"] = passed;
  j["value"] = number(value);
  for (auto& [k, v] : body.items()) j[k] = v;
  return {name, passed, value, j.dump(2)};
}

CheckResult identity_check(const std::string& name, const RunState& st, bool l2) {
  const double T = st.sc.T;
  diagnostics::IdentityResidual r;
  if (st.rtraj)
    r = l2 ? diagnostics::check_l2_identity(*st.rtraj, st.sc.p, 0.0, st.rtraj->times.back())
           : diagnostics::check_h1_identity(*st.rtraj, st.sc.p, 0.0, st.rtraj->times.back());
  else
    r = l2 ? diagnostics::check_l2_identity(*st.traj, 0.0, st.traj->times.back())
           : diagnostics::check_h1_identity(*st.traj, 0.0, st.traj->times.back());
  const double tol = st.sc.tolerance(name);
  json body = identity_json(r);
  body["tolerance"] = tol;
  body["window"] = {0.0, T};
  body["solver"] = st.rtraj ? "radial-wave" : "spectral";
  return finish(name, r.relative < tol, r.relative, body);
}

CheckResult gradient_check(const RunState& st) {
  double worst = 0.0;
  for (std::size_t i = 1; i < st.rows.size(); ++i) {
    const double prev = st.rows[i - 1].record.h1dot, cur = st.rows[i].record.h1dot;
    if (prev > 0.0) worst = std::max(worst, (cur - prev) / prev);
  }
  const double tol = st.sc.tolerance("gradient_monotone");
  json body;
  body["max_relative_increase"] = worst;
  body["tolerance"] = tol;
  return finish("gradient_monotone", worst <= tol, worst, body);
}

CheckResult hs_check(const RunState& st) {
  const auto b = diagnostics::check_hs_growth(*st.traj, st.sc.s, 1.0);
  json body = bound_json(b);
  body["s"] = st.sc.s;
  body["supplied_constant"] = 1.0;
  return finish("hs_growth", std::isfinite(b.empirical_constant), b.empirical_constant, body);
}

CheckResult h2_check(const RunState& st) {
  const auto b = diagnostics::check_h2_inequality(*st.traj, 0.0, st.traj->times.back());
  json body = bound_json(b);
  body["slack"] = b.rhs - b.lhs;
  return finish("h2_inequality", b.holds, b.rhs - b.lhs, body);
}

CheckResult scaling_check(const RunState& st) {
  const double tol = st.sc.tolerance("scaling");
  const double sc_exp = diagnostics::scaling_critical_exponent(st.sc.n, st.sc.p);
  json entries = json::array();
  bool ok = true;
  double worst = 0.0;
  std::vector<double> indices = {st.sc.s};
  if (sc_exp != st.sc.s) indices.push_back(sc_exp);
  for (double s : indices)
    for (double sigma : {0.5, 2.0}) {
      const auto r = diagnostics::check_scaling_law(*st.u0, sigma, s, st.sc.p);
      ok = ok && r.relative < tol;
      worst = std::max(worst, r.relative);
      entries.push_back({{"sigma", sigma},
                         {"s", s},
                         {"critical", s == sc_exp},
                         {"scaled_norm", r.lhs},
                         {"predicted", r.rhs},
                         {"relative", r.relative}});
    }
  json body;
  body["critical_exponent"] = sc_exp;
  body["tolerance"] = tol;
  body["entries"] = entries;
  return finish("scaling", ok, worst, body);
}

CheckResult duhamel_check(const RunState& st) {
  const double res = propagator::duhamel_residual(*st.traj);
  const double norm = spectral::lp_norm(*st.u0, 2.0);
  const double rel = norm > 0.0 ? res / norm : res;
  const double tol = st.sc.tolerance("duhamel");
  json body;
  body["residual"] = res;
  body["relative"] = rel;
  body["tolerance"] = tol;
  return finish("duhamel", rel < tol, rel, body);
}

CheckResult equivalence_check(const RunState& st) {
  const double r_max = std::min(0.45 * st.sc.L, 0.9 * st.sc.R);
  const auto rep = radial::compare_radial_spectral(*st.traj, *st.rtraj, r_max);
  const double tol = st.sc.tolerance("equivalence");
  json body;
  body["relative_linf"] = rep.relative_linf;
  body["tolerance"] = tol;
  body["r_max"] = r_max;
  body["compared_radii"] = rep.compared_radii;
  body["times"] = rep.times;
  body["relative_by_time"] = rep.relative_by_time;
  return finish("equivalence", rep.relative_linf < tol, rep.relative_linf, body);
}

CheckResult strauss_check(const RunState& st) {
  double first = 0.0, last = 0.0;
  if (st.rtraj) {
    first = diagnostics::strauss_ratio(st.rtraj->profiles.front(), 3, st.sc.s);
    last = diagnostics::strauss_ratio(st.rtraj->profiles.back(), 3, st.sc.s);
  } else {
    first = diagnostics::strauss_ratio(st.traj->snapshots.front(), st.sc.s);
    last = diagnostics::strauss_ratio(st.traj->snapshots.back(), st.sc.s);
  }
  json body;
  body["s"] = st.sc.s;
  body["ratio_initial"] = number(first);
  body["ratio_final"] = number(last);
  const double worst = std::max(first, last);
  return finish("strauss", std::isfinite(worst), worst, body);
}

CheckResult strichartz_check(const RunState& st) {
  const int samples = 200;
  const double T = st.sc.T, delta = st.sc.delta, q1 = st.sc.q1;
  double ratio = 0.0;
  if (st.f0) {
    const auto lin = radial::radial_linear_evolve(*st.f0, T / samples, T, 1);
    ratio = diagnostics::weighted_strichartz_ratio(lin, delta, q1);
  } else {
    // Free evolution is exact, so each sample is one multiplier application.
    std::vector<double> times(samples + 1), norms(samples + 1);
    for (int j = 0; j <= samples; ++j) {
      times[j] = T * j / samples;
      norms[j] = spectral::weighted_norm(propagator::linear_step(*st.u0, times[j]), delta, q1, -1);
    }
    const double data = spectral::lp_norm(*st.u0, 2.0);
    ratio = data > 0.0 ? spectral::space_time_norm(times, norms, q1) / data : 0.0;
  }
  json body;
  body["delta"] = delta;
  body["q1"] = q1;
  body["T"] = T;
  body["time_samples"] = samples;
  body["ratio"] = number(ratio);
  return finish("weighted_strichartz", std::isfinite(ratio), ratio, body);
}

CheckResult maximal_check(const RunState& st) {
  const auto b = radial::maximal_bound_check(*st.f0, st.sc.T);
  return finish("maximal", std::isfinite(b.empirical_constant), b.empirical_constant, bound_json(b));
}

CheckResult hardy_check(const RunState& st) {
  const auto b = diagnostics::hardy_time_derivative_check(*st.f0);
  return finish("hardy", b.holds, b.empirical_constant, bound_json(b));
}

CheckResult evaluate(const std::string& name, const RunState& st) {
  try {
    if (name == "l2_identity") return identity_check(name, st, true);
    if (name == "h1_identity") return identity_check(name, st, false);
    if (name == "gradient_monotone") return gradient_check(st);
    if (name == "hs_growth") return hs_check(st);
    if (name == "h2_inequality") return h2_check(st);
    if (name == "scaling") return scaling_check(st);
    if (name == "duhamel") return duhamel_check(st);
    if (name == "equivalence") return equivalence_check(st);
    if (name == "strauss") return strauss_check(st);
    if (name == "weighted_strichartz") return strichartz_check(st);
    if (name == "maximal") return maximal_check(st);
    if (name == "hardy") return hardy_check(st);
  } catch (const std::exception& e) {
    json body;
    body["error"] = e.what();
    return finish(name, false, NAN, body);
  }
  json body;
  body["error"] = "unknown check";
  return finish(name, false, NAN, body);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path.string());
  os << text;
  if (!os) throw IoError("failed writing " + path.string());
}

}  // namespace

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string scenario_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["n"] = sc.n;
  j["p"] = sc.p;
  j["s"] = sc.s;
  if (sc.uses_spectral()) {
    j["N"] = sc.N;
    j["L"] = sc.L;
    j["stride"] = sc.stride;
    j["dealias"] = sc.dealias;
  }
  if (sc.uses_radial()) {
    j["M"] = sc.M;
    j["R"] = sc.R;
  }
  j["data"] = sc.data.str();
  j["dt"] = sc.dt;
  j["T"] = sc.T;
  j["solver"] = to_string(sc.solver);
  j["regime"] = to_string(sc.regime);
  j["checks"] = sc.checks;
  if (sc.regime == Regime::radial_critical_small) j["h1_bound"] = sc.h1_bound;
  if (sc.has_check("weighted_strichartz")) {
    j["delta"] = sc.delta;
    j["q1"] = sc.q1;
  }
  json tol = json::object();
  for (const auto& c : sc.checks)
    if (sc.tolerance(c) > 0.0) tol[c] = sc.tolerance(c);
  j["tolerances"] = tol;
  return j.dump(2);
}

std::string RunReport::to_json(bool include_wall_time) const {
  json j;
  j["scenario"] = json::parse(scenario_json(scenario));
  j["diagnostics_csv"] = csv.filename().string();
  json cs = json::object();
  for (const auto& c : checks) cs[c.name] = {{"passed", c.passed}, {"value", number(c.value)}, {"report", c.name + ".json"}};
  j["checks"] = cs;
  j["passed"] = passed();
  if (include_wall_time) j["wall_time_s"] = wall_seconds;
  return j.dump(2) + "\n";
}

RunReport run(const Scenario& sc, const RunOptions& options) {
  validate(sc);
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.scenario = sc;
  report.directory = options.out_dir / sc.name;
  std::filesystem::create_directories(report.directory);

  RunState st{sc, {}, {}, {}, {}, {}};
  try {
    if (sc.uses_spectral()) {
      st.u0 = make_field(sc);
      propagator::StepperConfig cfg;
      cfg.p = sc.p;
      cfg.dt = sc.dt;
      cfg.final_time = sc.T;
      cfg.snapshot_stride = sc.stride;
      cfg.dealias = sc.dealias;
      st.traj = propagator::evolve(*st.u0, cfg);
    }
    if (sc.uses_radial()) {
      st.f0 = make_profile(sc);
      st.rtraj = radial::wave_evolve(*st.f0, sc.p, sc.dt, sc.T);
    }
  } catch (const NumericalError& e) {
    throw NumericalError(e.step(), "scenario '" + sc.name + "': " + strip_step_prefix(e.what()));
  }

  st.rows = st.rtraj ? diagnostics::diagnostics_table(*st.rtraj, sc.p, sc.s) : diagnostics::diagnostics_table(*st.traj, sc.s);
  report.rows = st.rows;
  report.csv = report.directory / "diagnostics.csv";
  {
    std::ofstream os(report.csv);
    if (!os) throw IoError("cannot write " + report.csv.string());
    diagnostics::write_diagnostics_csv(os, st.rows);
  }

  for (const auto& name : sc.checks) {
    report.checks.push_back(evaluate(name, st));
    write_text(report.directory / (name + ".json"), report.checks.back().json + "\n");
  }

  if (options.save_trajectory) {
    if (st.traj) propagator::write_trajectory(report.directory / "trajectory", *st.traj);
    if (st.rtraj) radial::write_radial_trajectory(report.directory / "radial_trajectory", *st.rtraj);
  }
  if (options.plots) emit_plots(report.csv, report.directory / "plots");

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_text(report.directory / "report.json", report.to_json(!options.deterministic));
  return report;
}

}  // namespace semirelax::runner
