#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "semirelax/semirelax.h"

namespace fs = std::filesystem;

namespace {

const char* kConfig = R"(
[scenario.tiny]
n = 1
p = 3
s = 1.5
N = 64
L = 20
data = gaussian(1, 1, 0)
dt = 0.01
T = 0.1
checks = l2_identity, gradient_monotone
tol.l2_identity = 1e-4
)";

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("semirelax_capi_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(sr_status_name(SR_OK)) == "ok");
  CHECK(std::string(sr_status_name(SR_ERR_PARSE)) == "parse error");
  CHECK(std::string(sr_version()).size() > 0);
}

TEST_CASE("field lifecycle, norms and the free propagator") {
  sr_field* f = nullptr;
  REQUIRE(sr_field_create(1, 64, 20.0, &f) == SR_OK);
  CHECK(sr_field_size(f) == 64);
  std::vector<double> v(128);
  for (int i = 0; i < 64; ++i) v[2 * i] = std::exp(-std::pow(-10.0 + i * 20.0 / 64, 2));
  REQUIRE(sr_field_set(f, v.data(), v.size() / 2) == SR_OK);
  double l2 = 0.0, after = 0.0, linf = 0.0;
  REQUIRE(sr_field_lp_norm(f, 2.0, &l2) == SR_OK);
  CHECK(l2 == doctest::Approx(std::pow(M_PI / 2, 0.25)).epsilon(1e-10));
  REQUIRE(sr_field_lp_norm(f, INFINITY, &linf) == SR_OK);
  CHECK(linf == doctest::Approx(1.0));
  REQUIRE(sr_field_linear_step(f, 0.7) == SR_OK);
  REQUIRE(sr_field_lp_norm(f, 2.0, &after) == SR_OK);
  CHECK(std::abs(after / l2 - 1.0) < 1e-12);
  CHECK(sr_field_set(f, v.data(), 10) == SR_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sr_last_error()).size() > 0);
  sr_field_free(f);
  sr_field_free(nullptr);
}

TEST_CASE("invalid arguments are reported, not thrown") {
  sr_field* f = nullptr;
  CHECK(sr_field_create(1, 12, 20.0, &f) == SR_ERR_INVALID_ARGUMENT);
  CHECK(f == nullptr);
  CHECK(std::string(sr_last_error()).find("power of two") != std::string::npos);
  CHECK(sr_field_create(1, 16, 20.0, nullptr) == SR_ERR_INVALID_ARGUMENT);
  double out = 0.0;
  CHECK(sr_scaling_critical_exponent(1, 1.0, &out) == SR_ERR_INVALID_ARGUMENT);
  CHECK(sr_field_read("/nonexistent/snapshot.txt", &f) == SR_ERR_IO);
}

TEST_CASE("evolution and identities") {
  sr_field* f = nullptr;
  REQUIRE(sr_field_create(1, 128, 30.0, &f) == SR_OK);
  std::vector<double> v(256);
  for (int i = 0; i < 128; ++i) v[2 * i] = std::exp(-std::pow(-15.0 + i * 30.0 / 128, 2));
  sr_field_set(f, v.data(), v.size() / 2);
  sr_stepper_options o = sr_stepper_defaults();
  o.dt = 1e-3;
  o.final_time = 0.5;
  o.snapshot_stride = 1;
  sr_trajectory* t = nullptr;
  REQUIRE(sr_evolve(f, &o, &t) == SR_OK);
  CHECK(sr_trajectory_size(t) == 501);
  CHECK(sr_trajectory_time(t, 500) == doctest::Approx(0.5));
  double r21 = 1.0, r22 = 1.0;
  REQUIRE(sr_l2_identity(t, 0.0, 0.5, &r21) == SR_OK);
  REQUIRE(sr_h1_identity(t, 0.0, 0.5, &r22) == SR_OK);
  CHECK(r21 < 1e-6);
  CHECK(r22 < 1e-5);
  CHECK(sr_l2_identity(t, 0.0, 0.1234, &r21) == SR_ERR_INVALID_ARGUMENT);
  sr_field* last = nullptr;
  REQUIRE(sr_trajectory_snapshot(t, 500, &last) == SR_OK);
  CHECK(sr_trajectory_snapshot(t, 501, &last) == SR_ERR_INVALID_ARGUMENT);
  sr_field_free(last);
  sr_trajectory_free(t);

  o.final_time = 0.0;
  o.dt = -1.0;
  CHECK(sr_evolve(f, &o, &t) == SR_ERR_INVALID_ARGUMENT);
  sr_field_free(f);
}

TEST_CASE("exponent bookkeeping") {
  double s = 0.0, p = 0.0;
  REQUIRE(sr_scaling_critical_exponent(3, 3.0, &s) == SR_OK);
  CHECK(s == 1.0);
  REQUIRE(sr_critical_power(3, 1.0, &p) == SR_OK);
  CHECK(p == 3.0);
  char* json = nullptr;
  REQUIRE(sr_check_exponents(3, "3", "1/2", "4", "4", &json) == SR_OK);
  const std::string j = json;
  sr_string_free(json);
  CHECK(j.find("\"critical_p\": \"2\"") != std::string::npos);
  CHECK(j.find("\"admissible\": true") != std::string::npos);
  CHECK(sr_check_exponents(3, "abc", nullptr, nullptr, nullptr, &json) == SR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config errors map to status codes") {
  sr_config* c = nullptr;
  CHECK(sr_config_parse("[scenario.a]\nbogus = 1\n", nullptr, &c) == SR_ERR_PARSE);
  CHECK(std::string(sr_last_error()).find("line 2") != std::string::npos);
  CHECK(sr_config_parse("[scenario.a]\nn = 1\np = 5\nchecks = h2_inequality\n", nullptr, &c) == SR_ERR_HYPOTHESIS);
  CHECK(sr_config_load("/nonexistent.conf", &c) == SR_ERR_IO);
  REQUIRE(sr_config_parse(kConfig, nullptr, &c) == SR_OK);
  size_t idx = 9;
  CHECK(sr_config_find(c, "missing", &idx) == SR_ERR_INVALID_ARGUMENT);
  REQUIRE(sr_config_find(c, "tiny", &idx) == SR_OK);
  CHECK(idx == 0);
  CHECK(sr_config_set(c, 0, "checks", "h2_inequality") == SR_OK);
  CHECK(sr_config_set(c, 0, "p", "5") == SR_ERR_HYPOTHESIS);
  CHECK(sr_config_set(c, 3, "p", "5") == SR_ERR_INVALID_ARGUMENT);
  sr_config_free(c);
}

TEST_CASE("run, report and sweep") {
  sr_config* c = nullptr;
  REQUIRE(sr_config_parse(kConfig, nullptr, &c) == SR_OK);
  CHECK(sr_config_count(c) == 1);
  CHECK(std::string(sr_config_name(c, 0)) == "tiny");
  const auto out = scratch("run");
  const std::string dir = out.string();
  const sr_run_options opts{dir.c_str(), 1, 0, 0};
  sr_report* r = nullptr;
  REQUIRE(sr_run(c, 0, &opts, &r) == SR_OK);
  CHECK(sr_report_passed(r) == 1);
  REQUIRE(sr_report_check_count(r) == 2);
  const char* name = nullptr;
  int passed = 0;
  double value = -1.0;
  REQUIRE(sr_report_check(r, 0, &name, &passed, &value) == SR_OK);
  CHECK(std::string(name) == "l2_identity");
  CHECK(passed == 1);
  CHECK(value < 1e-4);
  CHECK(std::string(sr_report_json(r)).find("\"scenario\"") != std::string::npos);
  CHECK(fs::exists(fs::path(sr_report_directory(r)) / "report.json"));
  sr_report_free(r);

  const char* axes[] = {"dt=0.02,0.01"};
  sr_sweep* s = nullptr;
  REQUIRE(sr_sweep_run(c, 0, axes, 1, &opts, 2, &s) == SR_OK);
  CHECK(sr_sweep_member_count(s) == 2);
  const char* err = nullptr;
  REQUIRE(sr_sweep_member(s, 1, &name, &passed, &err) == SR_OK);
  CHECK(std::string(name) == "tiny_dt-0.01");
  CHECK(std::string(err).empty());
  CHECK(fs::exists(sr_sweep_aggregate_path(s)));
  sr_sweep_free(s);
  const char* bad[] = {"colour=1"};
  CHECK(sr_sweep_run(c, 0, bad, 1, &opts, 1, &s) == SR_ERR_INVALID_ARGUMENT);
  sr_config_free(c);
  fs::remove_all(out);
}

TEST_CASE("last error is per thread") {
  sr_field* f = nullptr;
  CHECK(sr_field_create(1, 12, 1.0, &f) != SR_OK);
  const std::string here = sr_last_error();
  std::string there = "unset";
  std::thread([&] { there = sr_last_error(); }).join();
  CHECK(there.empty());
  CHECK_FALSE(here.empty());
}
