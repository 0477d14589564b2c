#include "semirelax/radial/profile_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semirelax/errors.hpp"

namespace semirelax::radial {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string profile_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "profile_%05zu.txt", i);
  return buf;
}

}  // namespace

void write_profile(std::ostream& os, const RadialProfile& f) {
  os << f.samples() << ' ' << format17(f.extent()) << '\n';
  for (const auto& v : f.values()) os << format17(v.real()) << ' ' << format17(v.imag()) << '\n';
}

void write_profile(const std::filesystem::path& path, const RadialProfile& f) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  write_profile(os, f);
  if (!os) throw IoError("failed writing " + path.string());
}

RadialProfile read_profile(std::istream& is) {
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line)) throw ParseError(lineno, "missing profile header");
  std::istringstream header(line);
  int M = 0;
  double R = 0.0;
  if (!(header >> M >> R)) throw ParseError(lineno, "header must be 'M R'");
  if (M < 16 || !(R > 0.0)) throw ParseError(lineno, "need M >= 16 and R > 0");
  std::vector<cplx> values(M);
  for (auto& v : values) {
    ++lineno;
    if (!std::getline(is, line)) throw ParseError(lineno, "unexpected end of profile data");
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) throw ParseError(lineno, "expected 're im'");
    v = {re, im};
  }
  return RadialProfile(R, std::move(values));
}

RadialProfile read_profile(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  return read_profile(is);
}

void write_radial_trajectory(const std::filesystem::path& dir, const RadialTrajectory& traj) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json meta;
  meta["dt"] = traj.dt;
  meta["linear"] = traj.linear;
  meta["times"] = traj.times;
  auto files = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < traj.profiles.size(); ++i) {
    files.push_back(profile_name(i));
    write_profile(dir / profile_name(i), traj.profiles[i]);
  }
  meta["files"] = files;
  std::ofstream os(dir / "meta.json");
  if (!os) throw IoError("cannot write " + (dir / "meta.json").string());
  os << meta.dump(2) << '\n';
}

RadialTrajectory read_radial_trajectory(const std::filesystem::path& dir) {
  std::ifstream is(dir / "meta.json");
  if (!is) throw IoError("cannot open " + (dir / "meta.json").string());
  RadialTrajectory traj;
  try {
    const auto meta = nlohmann::json::parse(is);
    traj.dt = meta.at("dt");
    traj.linear = meta.at("linear");
    traj.times = meta.at("times").get<std::vector<double>>();
    for (const auto& name : meta.at("files")) traj.profiles.push_back(read_profile(dir / name.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "meta.json: " + std::string(e.what()));
  }
  if (traj.times.size() != traj.profiles.size()) throw ParseError(0, "meta.json: times and files differ in length");
  return traj;
}

}  // namespace semirelax::radial
