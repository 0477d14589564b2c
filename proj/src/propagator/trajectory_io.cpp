#include "semirelax/propagator/trajectory_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "semirelax/errors.hpp"
#include "semirelax/spectral/snapshot_io.hpp"

namespace semirelax::propagator {

namespace {

std::string snapshot_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%05zu.txt", i);
  return buf;
}

nlohmann::ordered_json read_meta(const std::filesystem::path& dir) {
  std::ifstream is(dir / "meta.json");
  if (!is) throw IoError("cannot open " + (dir / "meta.json").string());
  try {
    return nlohmann::ordered_json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, "meta.json: " + std::string(e.what()));
  }
}

}  // namespace

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj) {
  std::filesystem::create_directories(dir);
  const auto& c = traj.config;
  nlohmann::ordered_json meta;
  meta["config"] = {{"p", c.p},
                    {"dt", c.dt},
                    {"final_time", c.final_time},
                    {"scheme", c.scheme == SplittingScheme::strang ? "strang" : "lie"},
                    {"snapshot_stride", c.snapshot_stride},
                    {"dealias", c.dealias},
                    {"nonlinear_coefficient", c.nonlinear_coefficient}};
  meta["times"] = traj.times;
  auto files = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    files.push_back(snapshot_name(i));
    spectral::write_field(dir / snapshot_name(i), traj.snapshots[i]);
  }
  meta["files"] = files;
  std::ofstream os(dir / "meta.json");
  if (!os) throw IoError("cannot write " + (dir / "meta.json").string());
  os << meta.dump(2) << '\n';
}

Trajectory read_trajectory(const std::filesystem::path& dir) {
  const auto meta = read_meta(dir);
  Trajectory traj;
  try {
    const auto& c = meta.at("config");
    traj.config.p = c.at("p");
    traj.config.dt = c.at("dt");
    traj.config.final_time = c.at("final_time");
    traj.config.scheme = c.at("scheme") == "lie" ? SplittingScheme::lie : SplittingScheme::strang;
    traj.config.snapshot_stride = c.at("snapshot_stride");
    traj.config.dealias = c.at("dealias");
    traj.config.nonlinear_coefficient = c.at("nonlinear_coefficient");
    traj.times = meta.at("times").get<std::vector<double>>();
    for (const auto& name : meta.at("files")) traj.snapshots.push_back(spectral::read_field(dir / name.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "meta.json: " + std::string(e.what()));
  }
  if (traj.times.size() != traj.snapshots.size()) throw ParseError(0, "meta.json: times and files differ in length");
  return traj;
}

}  // namespace semirelax::propagator
