// Command-line front end. Talks to the library only through semirelax.h.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semirelax/semirelax.h"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitError = 2;

int report_error(sr_status st, const std::string& context) {
  std::cerr << "semirelax: " << context << ": " << sr_status_name(st) << ": " << sr_last_error() << '\n';
  return kExitError;
}

struct Config {
  sr_config* handle = nullptr;
  ~Config() { sr_config_free(handle); }
};

sr_status apply_overrides(sr_config* cfg, size_t index, const std::vector<std::string>& overrides) {
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "semirelax: --set expects key=value, got '" << kv << "'\n";
      return SR_ERR_INVALID_ARGUMENT;
    }
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (sr_status st = sr_config_set(cfg, index, key.c_str(), value.c_str()); st != SR_OK) return st;
  }
  return SR_OK;
}

int cmd_run(const std::string& config_path, const std::string& scenario, const std::string& out_dir, bool deterministic,
            bool plots, bool save_trajectory, const std::vector<std::string>& overrides) {
  Config cfg;
  if (sr_status st = sr_config_load(config_path.c_str(), &cfg.handle); st != SR_OK)
    return report_error(st, "loading " + config_path);

  std::vector<size_t> indices;
  if (!scenario.empty()) {
    size_t index = 0;
    if (sr_status st = sr_config_find(cfg.handle, scenario.c_str(), &index); st != SR_OK)
      return report_error(st, "selecting scenario");
    indices.push_back(index);
  } else {
    for (size_t i = 0; i < sr_config_count(cfg.handle); ++i) indices.push_back(i);
  }

  const sr_run_options options{out_dir.c_str(), deterministic ? 1 : 0, plots ? 1 : 0, save_trajectory ? 1 : 0};
  bool all_passed = true;
  for (size_t index : indices) {
    const std::string name = sr_config_name(cfg.handle, index);
    if (sr_status st = apply_overrides(cfg.handle, index, overrides); st != SR_OK)
      return report_error(st, "overriding " + name);
    sr_report* report = nullptr;
    if (sr_status st = sr_run(cfg.handle, index, &options, &report); st != SR_OK) return report_error(st, "running " + name);
    const bool passed = sr_report_passed(report) != 0;
    all_passed = all_passed && passed;
    std::printf("%s: %s (%s)\n", name.c_str(), passed ? "PASS" : "FAIL", sr_report_directory(report));
    for (size_t k = 0; k < sr_report_check_count(report); ++k) {
      const char* check = nullptr;
      int ok = 0;
      double value = 0.0;
      sr_report_check(report, k, &check, &ok, &value);
      std::printf("  %-20s %-4s %.6e\n", check, ok ? "ok" : "FAIL", value);
    }
    sr_report_free(report);
  }
  return all_passed ? 0 : kExitFailedChecks;
}

int cmd_sweep(const std::string& config_path, std::string scenario, const std::vector<std::string>& vary,
              const std::string& out_dir, bool deterministic, bool plots, int threads,
              const std::vector<double>& bisect, const std::vector<std::string>& overrides) {
  Config cfg;
  if (sr_status st = sr_config_load(config_path.c_str(), &cfg.handle); st != SR_OK)
    return report_error(st, "loading " + config_path);
  size_t index = 0;
  if (!scenario.empty()) {
    if (sr_status st = sr_config_find(cfg.handle, scenario.c_str(), &index); st != SR_OK)
      return report_error(st, "selecting scenario");
  } else if (sr_config_count(cfg.handle) != 1) {
    std::cerr << "semirelax: the config holds " << sr_config_count(cfg.handle)
              << " scenarios; choose one with --scenario\n";
    return kExitError;
  }
  if (sr_status st = apply_overrides(cfg.handle, index, overrides); st != SR_OK) return report_error(st, "overriding");
  const sr_run_options options{out_dir.c_str(), deterministic ? 1 : 0, plots ? 1 : 0, 0};

  if (!bisect.empty()) {
    if (bisect.size() < 2 || bisect.size() > 3) {
      std::cerr << "semirelax: --bisect-amplitude expects lo,hi[,iterations]\n";
      return kExitError;
    }
    const int iterations = bisect.size() == 3 ? static_cast<int>(bisect[2]) : 6;
    double stable = 0.0, unstable = 0.0;
    if (sr_status st = sr_bisect_amplitude(cfg.handle, index, bisect[0], bisect[1], iterations, &options, &stable, &unstable);
        st != SR_OK)
      return report_error(st, "bisecting amplitude");
    std::printf("largest stable amplitude: %.17g\nsmallest unstable amplitude: %.17g\n", stable, unstable);
    return 0;
  }

  std::vector<const char*> axes;
  for (const auto& v : vary) axes.push_back(v.c_str());
  sr_sweep* result = nullptr;
  if (sr_status st = sr_sweep_run(cfg.handle, index, axes.data(), axes.size(), &options, threads, &result); st != SR_OK)
    return report_error(st, "sweeping");
  for (size_t k = 0; k < sr_sweep_member_count(result); ++k) {
    const char* name = nullptr;
    const char* error = nullptr;
    int passed = 0;
    sr_sweep_member(result, k, &name, &passed, &error);
    std::printf("%s: %s%s%s\n", name, passed ? "PASS" : "FAIL", *error ? " " : "", error);
  }
  std::printf("aggregate: %s\n", sr_sweep_aggregate_path(result));
  const bool passed = sr_sweep_passed(result) != 0;
  sr_sweep_free(result);
  return passed ? 0 : kExitFailedChecks;
}

nlohmann::json exponents(int n, const std::string& p, const char* s, const char* q, const char* r, sr_status& st) {
  char* text = nullptr;
  st = sr_check_exponents(n, p.c_str(), s, q, r, &text);
  if (st != SR_OK) return {};
  auto j = nlohmann::json::parse(text);
  sr_string_free(text);
  return j;
}

int cmd_exponents(int n, const std::string& p, const std::string& s_arg, const std::string& q_arg,
                  const std::string& r_arg, bool as_json) {
  sr_status st = SR_OK;
  const char* q = q_arg.empty() ? nullptr : q_arg.c_str();
  const auto base = exponents(n, p, nullptr, nullptr, nullptr, st);
  if (st != SR_OK) return report_error(st, "check-exponents");
  const std::string s = s_arg.empty() ? base["critical_s"].get<std::string>() : s_arg;

  std::vector<std::string> rs;
  if (!r_arg.empty()) rs.push_back(r_arg);
  else rs = {"3", "4", "6", "8", "inf"};

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rs) {
    auto j = exponents(n, p, s.c_str(), q, r.c_str(), st);
    if (st != SR_OK) return report_error(st, "check-exponents (r = " + r + ")");
    rows.push_back(j);
  }
  if (as_json) {
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  std::printf("n = %d, p = %s\n", n, base["p"].get<std::string>().c_str());
  std::printf("s_{n,p} = n/2 - 1/(p-1) = %s\n", base["critical_s"].get<std::string>().c_str());
  const auto& first = rows.front();
  if (first.contains("critical_p"))
    std::printf("p_{n,s} = 1 + 2/(n-2s) at s = %s: %s\n", s.c_str(), first["critical_p"].get<std::string>().c_str());
  else
    std::printf("p_{n,s} at s = %s: undefined (needs s < n/2)\n", s.c_str());
  for (const auto& row : rows) {
    if (row.contains("admissible"))
      std::printf("(q, r) = (%s, %s): %s\n", row["q"].get<std::string>().c_str(), row["r"].get<std::string>().c_str(),
                  row["admissible"].get<bool>() ? "admissible" : "not admissible");
    if (row.contains("embedding"))
      std::printf("r = %-4s threshold 3/4 + 1/(2r) = %-6s s = %s: %s\n", row["r"].get<std::string>().c_str(),
                  row["embedding_threshold"].get<std::string>().c_str(), s.c_str(),
                  row["embedding"].get<bool>() ? "embedding holds" : "embedding fails");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and diagnostics for i u_t - D u = -i |u|^{p-1} u"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sr_version()));

  std::string config, scenario, out_dir = "out";
  bool deterministic = false, plots = false, save_trajectory = false;
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "run scenarios from a config file");
  run->add_option("--config", config, "scenario config file")->required();
  run->add_option("--scenario", scenario, "run only this scenario");
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  run->add_flag("--deterministic", deterministic, "omit wall-clock time from the outputs");
  run->add_flag("--plots", plots, "write SVG charts of the diagnostics");
  run->add_flag("--save-trajectory", save_trajectory, "write the snapshots as well");
  run->add_option("--set", overrides, "override a scenario key (key=value)");

  std::vector<std::string> vary;
  std::vector<double> bisect;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "run a parameter grid over one scenario");
  sweep->add_option("--config", config, "scenario config file")->required();
  sweep->add_option("--scenario", scenario, "scenario to sweep (needed when the file has several)");
  sweep->add_option("--vary", vary, "axis key=v1,v2,... (dt, N, amplitude, sigma); repeatable");
  sweep->add_option("--out", out_dir, "output directory")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (default: SEMIRELAX_THREADS or all cores)");
  sweep->add_flag("--deterministic", deterministic, "omit wall-clock time from the outputs");
  sweep->add_flag("--plots", plots, "write SVG charts, including the refinement chart");
  sweep->add_option("--bisect-amplitude", bisect, "lo,hi[,iterations]: bisect for the largest stable amplitude")
      ->delimiter(',');
  sweep->add_option("--set", overrides, "override a scenario key (key=value)");

  int n = 3;
  std::string p, s, q, r;
  bool as_json = false;
  auto* exps = app.add_subcommand("check-exponents", "critical exponents, admissibility and embedding verdicts");
  exps->add_option("--n", n, "space dimension")->required();
  exps->add_option("--p", p, "power (decimal or a/b)")->required();
  exps->add_option("--s", s, "Sobolev index (default: s_{n,p})");
  exps->add_option("--q", q, "time exponent for the admissibility check");
  exps->add_option("--r", r, "space exponent (default: a table of r values)");
  exps->add_flag("--json", as_json, "print the raw JSON reports");

  CLI11_PARSE(app, argc, argv);

  if (*run) return cmd_run(config, scenario, out_dir, deterministic, plots, save_trajectory, overrides);
  if (*sweep) {
    if (vary.empty() && bisect.empty()) {
      std::cerr << "semirelax: sweep needs --vary or --bisect-amplitude\n";
      return kExitError;
    }
    return cmd_sweep(config, scenario, vary, out_dir, deterministic, plots, threads, bisect, overrides);
  }
  return cmd_exponents(n, p, s, q, r, as_json);
}
