#include "semirelax/semirelax.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "semirelax/diagnostics/exponents.hpp"
#include "semirelax/diagnostics/identities.hpp"
#include "semirelax/errors.hpp"
#include "semirelax/propagator/stepper.hpp"
#include "semirelax/propagator/trajectory_io.hpp"
#include "semirelax/runner/sweep.hpp"
#include "semirelax/spectral/norms.hpp"
#include "semirelax/spectral/snapshot_io.hpp"

using namespace semirelax;

struct sr_field {
  spectral::Field field;
};

struct sr_trajectory {
  propagator::Trajectory traj;
};

struct sr_config {
  std::vector<runner::Scenario> scenarios;
  std::filesystem::path base_dir;
};

struct sr_report {
  runner::RunReport report;
  std::string json;
  std::string directory;
};

struct sr_sweep {
  runner::SweepResult result;
  std::string aggregate;
};

namespace {

thread_local std::string g_last_error;

sr_status fail(sr_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
sr_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SR_OK;
  } catch (const ParseError& e) {
    return fail(SR_ERR_PARSE, e.what());
  } catch (const HypothesisError& e) {
    return fail(SR_ERR_HYPOTHESIS, e.what());
  } catch (const NumericalError& e) {
    return fail(SR_ERR_NUMERICAL, e.what());
  } catch (const IoError& e) {
    return fail(SR_ERR_IO, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(SR_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SR_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

runner::RunOptions run_options(const sr_run_options* o) {
  runner::RunOptions r;
  if (o != nullptr) {
    if (o->out_dir != nullptr) r.out_dir = o->out_dir;
    r.deterministic = o->deterministic != 0;
    r.plots = o->plots != 0;
    r.save_trajectory = o->save_trajectory != 0;
  }
  return r;
}

const runner::Scenario& scenario_at(const sr_config* c, size_t i) {
  require(c != nullptr, "null config handle");
  require(i < c->scenarios.size(), "scenario index out of range");
  return c->scenarios[i];
}

}  // namespace

extern "C" {

const char* sr_last_error(void) { return g_last_error.c_str(); }

const char* sr_status_name(sr_status status) {
  switch (status) {
    case SR_OK: return "ok";
    case SR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SR_ERR_PARSE: return "parse error";
    case SR_ERR_HYPOTHESIS: return "hypothesis violated";
    case SR_ERR_NUMERICAL: return "numerical failure";
    case SR_ERR_IO: return "i/o error";
    case SR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sr_version(void) { return "0.1.0"; }

void sr_string_free(char* s) { std::free(s); }

sr_status sr_field_create(int n, int N, double L, sr_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new sr_field{spectral::Field(spectral::make_grid(n, N, L))};
  });
}

sr_status sr_field_set(sr_field* f, const double* interleaved, size_t count) {
  return guarded([&] {
    require(f != nullptr && interleaved != nullptr, "null argument");
    require(count == f->field.size(), "sample count does not match the grid");
    spectral::Field phys(f->field.grid());
    for (size_t i = 0; i < count; ++i) phys[i] = {interleaved[2 * i], interleaved[2 * i + 1]};
    f->field = std::move(phys);
  });
}

sr_status sr_field_get(const sr_field* f, double* interleaved, size_t count) {
  return guarded([&] {
    require(f != nullptr && interleaved != nullptr, "null argument");
    require(count == f->field.size(), "sample count does not match the grid");
    const auto phys = f->field.to_physical();
    for (size_t i = 0; i < count; ++i) {
      interleaved[2 * i] = phys[i].real();
      interleaved[2 * i + 1] = phys[i].imag();
    }
  });
}

size_t sr_field_size(const sr_field* f) { return f == nullptr ? 0 : f->field.size(); }

sr_status sr_field_read(const char* path, sr_field** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new sr_field{spectral::read_field(std::filesystem::path(path))};
  });
}

sr_status sr_field_write(const sr_field* f, const char* path) {
  return guarded([&] {
    require(f != nullptr && path != nullptr, "null argument");
    spectral::write_field(std::filesystem::path(path), f->field);
  });
}

sr_status sr_field_lp_norm(const sr_field* f, double p, double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = spectral::lp_norm(f->field, p);
  });
}

sr_status sr_field_sobolev_norm(const sr_field* f, double s, int homogeneous, double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = spectral::sobolev_norm(f->field, {s, homogeneous != 0});
  });
}

sr_status sr_field_linear_step(sr_field* f, double tau) {
  return guarded([&] {
    require(f != nullptr, "null field handle");
    f->field = propagator::linear_step(f->field, tau);
  });
}

void sr_field_free(sr_field* f) { delete f; }

sr_stepper_options sr_stepper_defaults(void) {
  const propagator::StepperConfig c;
  return {c.p, c.dt, c.final_time, c.snapshot_stride, c.dealias ? 1 : 0, 0, c.nonlinear_coefficient};
}

sr_status sr_evolve(const sr_field* u0, const sr_stepper_options* o, sr_trajectory** out) {
  return guarded([&] {
    require(u0 != nullptr && o != nullptr && out != nullptr, "null argument");
    propagator::StepperConfig c;
    c.p = o->p;
    c.dt = o->dt;
    c.final_time = o->final_time;
    c.snapshot_stride = o->snapshot_stride;
    c.dealias = o->dealias != 0;
    c.scheme = o->lie ? propagator::SplittingScheme::lie : propagator::SplittingScheme::strang;
    c.nonlinear_coefficient = o->nonlinear_coefficient;
    *out = new sr_trajectory{propagator::evolve(u0->field, c)};
  });
}

size_t sr_trajectory_size(const sr_trajectory* t) { return t == nullptr ? 0 : t->traj.size(); }

double sr_trajectory_time(const sr_trajectory* t, size_t i) {
  return t == nullptr || i >= t->traj.size() ? NAN : t->traj.times[i];
}

sr_status sr_trajectory_snapshot(const sr_trajectory* t, size_t i, sr_field** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    require(i < t->traj.size(), "snapshot index out of range");
    *out = new sr_field{t->traj.snapshots[i]};
  });
}

sr_status sr_trajectory_write(const sr_trajectory* t, const char* dir) {
  return guarded([&] {
    require(t != nullptr && dir != nullptr, "null argument");
    propagator::write_trajectory(dir, t->traj);
  });
}

sr_status sr_l2_identity(const sr_trajectory* t, double t1, double t2, double* relative) {
  return guarded([&] {
    require(t != nullptr && relative != nullptr, "null argument");
    *relative = diagnostics::check_l2_identity(t->traj, t1, t2).relative;
  });
}

sr_status sr_h1_identity(const sr_trajectory* t, double t1, double t2, double* relative) {
  return guarded([&] {
    require(t != nullptr && relative != nullptr, "null argument");
    *relative = diagnostics::check_h1_identity(t->traj, t1, t2).relative;
  });
}

void sr_trajectory_free(sr_trajectory* t) { delete t; }

sr_status sr_scaling_critical_exponent(int n, double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = diagnostics::scaling_critical_exponent(n, p);
  });
}

sr_status sr_critical_power(int n, double s, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(s < 0.5 * n, "critical power needs s < n/2");
    *out = 1.0 + 2.0 / (n - 2.0 * s);
  });
}

sr_status sr_check_exponents(int n, const char* p, const char* s, const char* q, const char* r, char** json) {
  return guarded([&] {
    require(p != nullptr && json != nullptr, "null argument");
    using diagnostics::Exponent;
    using diagnostics::Rational;
    std::optional<Rational> sv;
    std::optional<Exponent> qv, rv;
    if (s != nullptr) sv = Rational::parse(s);
    if (q != nullptr) qv = Exponent::parse(q);
    if (r != nullptr) rv = Exponent::parse(r);
    *json = duplicate(diagnostics::check_exponents(n, Rational::parse(p), sv, qv, rv).to_json());
  });
}

sr_status sr_config_load(const char* path, sr_config** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    const std::filesystem::path p(path);
    *out = new sr_config{runner::load_config(p), p.parent_path()};
  });
}

sr_status sr_config_parse(const char* text, const char* base_dir, sr_config** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    std::istringstream is(text);
    const std::filesystem::path base = base_dir != nullptr ? base_dir : "";
    *out = new sr_config{runner::parse_config(is, base), base};
  });
}

size_t sr_config_count(const sr_config* c) { return c == nullptr ? 0 : c->scenarios.size(); }

const char* sr_config_name(const sr_config* c, size_t i) {
  return c == nullptr || i >= c->scenarios.size() ? nullptr : c->scenarios[i].name.c_str();
}

sr_status sr_config_find(const sr_config* c, const char* name, size_t* index) {
  return guarded([&] {
    require(c != nullptr && name != nullptr && index != nullptr, "null argument");
    for (size_t i = 0; i < c->scenarios.size(); ++i)
      if (c->scenarios[i].name == name) {
        *index = i;
        return;
      }
    throw std::invalid_argument(std::string("no scenario named '") + name + "'");
  });
}

sr_status sr_config_set(sr_config* c, size_t i, const char* key, const char* value) {
  return guarded([&] {
    require(key != nullptr && value != nullptr, "null argument");
    runner::Scenario sc = scenario_at(c, i);
    runner::assign(sc, key, value, c->base_dir);
    runner::validate(sc);
    c->scenarios[i] = std::move(sc);
  });
}

void sr_config_free(sr_config* c) { delete c; }

sr_status sr_run(const sr_config* c, size_t i, const sr_run_options* options, sr_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    auto report = runner::run(scenario_at(c, i), run_options(options));
    auto json = report.to_json(options == nullptr || options->deterministic == 0);
    auto dir = report.directory.string();
    *out = new sr_report{std::move(report), std::move(json), std::move(dir)};
  });
}

int sr_report_passed(const sr_report* r) { return r != nullptr && r->report.passed() ? 1 : 0; }

size_t sr_report_check_count(const sr_report* r) { return r == nullptr ? 0 : r->report.checks.size(); }

sr_status sr_report_check(const sr_report* r, size_t k, const char** name, int* passed, double* value) {
  return guarded([&] {
    require(r != nullptr, "null report handle");
    require(k < r->report.checks.size(), "check index out of range");
    const auto& c = r->report.checks[k];
    if (name != nullptr) *name = c.name.c_str();
    if (passed != nullptr) *passed = c.passed ? 1 : 0;
    if (value != nullptr) *value = c.value;
  });
}

const char* sr_report_json(const sr_report* r) { return r == nullptr ? nullptr : r->json.c_str(); }
const char* sr_report_directory(const sr_report* r) { return r == nullptr ? nullptr : r->directory.c_str(); }
void sr_report_free(sr_report* r) { delete r; }

sr_status sr_sweep_run(const sr_config* c, size_t i, const char* const* axes, size_t axis_count,
                       const sr_run_options* options, int threads, sr_sweep** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(axis_count == 0 || axes != nullptr, "null axis list");
    std::vector<runner::SweepAxis> parsed;
    for (size_t a = 0; a < axis_count; ++a) parsed.push_back(runner::parse_axis(axes[a]));
    runner::SweepOptions so;
    so.run = run_options(options);
    so.threads = threads;
    auto result = runner::sweep(scenario_at(c, i), parsed, so);
    auto path = result.aggregate.string();
    *out = new sr_sweep{std::move(result), std::move(path)};
  });
}

int sr_sweep_passed(const sr_sweep* s) { return s != nullptr && s->result.passed() ? 1 : 0; }
size_t sr_sweep_member_count(const sr_sweep* s) { return s == nullptr ? 0 : s->result.members.size(); }

sr_status sr_sweep_member(const sr_sweep* s, size_t k, const char** name, int* passed, const char** error) {
  return guarded([&] {
    require(s != nullptr, "null sweep handle");
    require(k < s->result.members.size(), "member index out of range");
    const auto& m = s->result.members[k];
    if (name != nullptr) *name = m.scenario.name.c_str();
    if (passed != nullptr) *passed = m.passed() ? 1 : 0;
    if (error != nullptr) *error = m.error.c_str();
  });
}

const char* sr_sweep_aggregate_path(const sr_sweep* s) { return s == nullptr ? nullptr : s->aggregate.c_str(); }
void sr_sweep_free(sr_sweep* s) { delete s; }

sr_status sr_bisect_amplitude(const sr_config* c, size_t i, double lo, double hi, int iterations,
                              const sr_run_options* options, double* largest_stable, double* smallest_unstable) {
  return guarded([&] {
    const auto r = runner::bisect_amplitude(scenario_at(c, i), lo, hi, iterations, run_options(options));
    if (largest_stable != nullptr) *largest_stable = r.largest_stable;
    if (smallest_unstable != nullptr) *smallest_unstable = r.smallest_unstable;
  });
}

}  // extern "C"
