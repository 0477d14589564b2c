#include "semirelax/runner/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "semirelax/errors.hpp"
#include "semirelax/runner/plots.hpp"

namespace semirelax::runner {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kAxisKeys = {"dt", "N", "amplitude", "sigma"};

// Checks whose headline value is an empirical constant, with the largest
// max/min spread still counted as stable.
const std::map<std::string, double> kConstantSpread = {
    {"hs_growth", 1.1}, {"h2_inequality", 1.1}, {"strauss", 2.0},
    {"weighted_strichartz", 2.0}, {"maximal", 2.0}, {"hardy", 2.0},
};

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string member_label(const std::vector<std::pair<std::string, double>>& params) {
  std::string label;
  for (const auto& [k, v] : params) label += (label.empty() ? "" : "_") + k + "-" + format_value(v);
  return label;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const CheckResult* find_check(const RunReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

SweepAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("sweep axis must look like key=v1,v2,...");
  SweepAxis axis;
  axis.key = spec.substr(0, eq);
  if (std::find(kAxisKeys.begin(), kAxisKeys.end(), axis.key) == kAxisKeys.end())
    throw std::invalid_argument("cannot sweep '" + axis.key + "' (choose dt, N, amplitude or sigma)");
  std::string rest = spec.substr(eq + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("sweep value '" + item + "' is not a number");
    axis.values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return axis;
}

int thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SEMIRELAX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) cap = v;
  }
  return std::max(cap, 1);
}

void apply(Scenario& sc, const std::string& key, double value) {
  if (key == "dt") {
    sc.dt = value;
  } else if (key == "N") {
    sc.N = static_cast<int>(value);
  } else if (key == "amplitude") {
    sc.data.amplitude = value;
  } else if (key == "sigma") {
    if (!(value > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (sc.data.kind == DataSpec::Kind::file) throw std::invalid_argument("file data cannot be rescaled");
    if (sc.data.kind == DataSpec::Kind::gaussian) {
      sc.data.amplitude *= std::pow(value, 1.0 / (sc.p - 1.0));
      sc.data.width /= value;
      sc.data.center /= value;
    } else {
      sc.data.amplitude *= std::pow(value, 1.0 / (sc.p - 1.0));
    }
    sc.L /= value;
    sc.R /= value;
    sc.dt /= value;
    sc.T /= value;
  } else {
    throw std::invalid_argument("cannot sweep '" + key + "'");
  }
}

bool SweepResult::passed() const {
  return std::all_of(members.begin(), members.end(), [](const SweepMember& m) { return m.passed(); });
}

SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes, const SweepOptions& options) {
  SweepResult result;
  // Cartesian product, first axis slowest.
  std::vector<std::vector<std::pair<std::string, double>>> grid = {{}};
  for (const auto& axis : axes) {
    if (axis.values.empty()) throw std::invalid_argument("sweep axis '" + axis.key + "' has no values");
    std::vector<std::vector<std::pair<std::string, double>>> next;
    for (const auto& prefix : grid)
      for (double v : axis.values) {
        auto p = prefix;
        p.emplace_back(axis.key, v);
        next.push_back(std::move(p));
      }
    grid = std::move(next);
  }
  for (const auto& params : grid) {
    SweepMember m;
    m.params = params;
    m.scenario = base;
    if (!params.empty()) m.scenario.name = base.name + "_" + member_label(params);
    try {
      for (const auto& [k, v] : params) apply(m.scenario, k, v);
    } catch (const std::exception& e) {
      m.error = e.what();
    }
    result.members.push_back(std::move(m));
  }

  const int workers =
      std::max(1, std::min(options.threads > 0 ? options.threads : thread_cap(), static_cast<int>(result.members.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < result.members.size(); i = next++) {
      auto& m = result.members[i];
      if (!m.error.empty()) continue;
      try {
        m.report = run(m.scenario, options.run);
      } catch (const std::exception& e) {
        m.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  // Aggregation in member order.
  json agg;
  agg["scenario"] = base.name;
  json ax = json::object();
  for (const auto& axis : axes) ax[axis.key] = axis.values;
  agg["axes"] = ax;
  json members = json::array();
  for (const auto& m : result.members) {
    json j;
    json params = json::object();
    for (const auto& [k, v] : m.params) params[k] = v;
    j["params"] = params;
    j["name"] = m.scenario.name;
    j["passed"] = m.passed();
    if (!m.error.empty()) j["error"] = m.error;
    if (m.report) {
      const auto& last = m.report->rows.back();
      j["final_res_prop21"] = number(last.res_l2);
      j["final_res_prop22"] = number(last.res_h1);
      json checks = json::object();
      for (const auto& c : m.report->checks) checks[c.name] = {{"passed", c.passed}, {"value", number(c.value)}};
      j["checks"] = checks;
    }
    members.push_back(j);
  }
  agg["members"] = members;

  if (axes.size() == 1 && axes[0].key == "dt") {
    json conv = json::object();
    for (const char* column : {"res_prop21", "res_prop22"}) {
      std::vector<double> x, y;
      for (const auto& m : result.members) {
        if (!m.report) continue;
        const double v = std::string(column) == "res_prop21" ? m.report->rows.back().res_l2 : m.report->rows.back().res_h1;
        if (v > 0.0) {
          x.push_back(m.scenario.dt);
          y.push_back(v);
        }
      }
      if (x.size() >= 2) {
        const auto svg = options.run.out_dir / ("sweep_" + base.name + "_" + column + ".svg");
        conv[column] = options.run.plots
                           ? write_refinement_plot(x, y, std::string(column) + " against dt", "dt", column, svg)
                           : loglog_slope(x, y);
      } else {
        conv[column] = nullptr;
      }
    }
    agg["convergence_order"] = conv;
  }

  json stability = json::object();
  for (const auto& [name, spread] : kConstantSpread) {
    std::vector<double> values;
    for (const auto& m : result.members)
      if (m.report)
        if (const auto* c = find_check(*m.report, name); c && std::isfinite(c->value)) values.push_back(std::abs(c->value));
    if (values.size() < 2) continue;
    const double lo = *std::min_element(values.begin(), values.end());
    const double hi = *std::max_element(values.begin(), values.end());
    const double ratio = hi == 0.0 ? 1.0 : (lo == 0.0 ? INFINITY : hi / lo);
    stability[name] = {{"min", lo}, {"max", hi}, {"ratio", number(ratio)}, {"allowed_ratio", spread}, {"stable", ratio <= spread}};
  }
  agg["constant_stability"] = stability;

  for (const auto& axis : axes)
    if (axis.key == "amplitude") {
      double best = NAN;
      for (const auto& m : result.members)
        if (m.passed()) best = std::isnan(best) ? m.scenario.data.amplitude : std::max(best, m.scenario.data.amplitude);
      agg["largest_stable_amplitude"] = number(best);
    }
  agg["passed"] = result.passed();

  std::filesystem::create_directories(options.run.out_dir);
  result.aggregate = options.run.out_dir / ("sweep_" + base.name + ".json");
  std::ofstream os(result.aggregate);
  if (!os) throw IoError("cannot write " + result.aggregate.string());
  os << agg.dump(2) << '\n';
  return result;
}

BisectionResult bisect_amplitude(const Scenario& base, double lo, double hi, int iterations, const RunOptions& options) {
  if (!(lo < hi)) throw std::invalid_argument("bisection needs lo < hi");
  BisectionResult out;
  auto stable = [&](double a) {
    Scenario sc = base;
    sc.data.amplitude = a;
    sc.regime = Regime::none;
    sc.name = base.name + "_bisect_amplitude-" + format_value(a);
    bool ok = false;
    try {
      ok = run(sc, options).passed();
    } catch (const NumericalError&) {
      ok = false;
    }
    out.probes.emplace_back(a, ok);
    return ok;
  };
  if (!stable(lo)) throw std::invalid_argument("lower amplitude " + format_value(lo) + " is not stable");
  if (stable(hi)) {
    out.largest_stable = hi;
    out.smallest_unstable = NAN;
    return out;
  }
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  out.largest_stable = lo;
  out.smallest_unstable = hi;
  return out;
}

}  // namespace semirelax::runner
