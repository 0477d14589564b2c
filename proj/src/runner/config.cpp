#include "semirelax/runner/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "semirelax/errors.hpp"
#include "semirelax/radial/halfwave.hpp"
#include "semirelax/radial/profile_io.hpp"
#include "semirelax/spectral/grid.hpp"

namespace semirelax::runner {

namespace {

const std::map<std::string, double> kDefaultTolerances = {
    {"l2_identity", 1e-6}, {"h1_identity", 1e-5}, {"gradient_monotone", 1e-8}, {"scaling", 1e-8},
    {"duhamel", 1e-3},     {"equivalence", 1e-2},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  if (const auto slash = v.find('/'); slash != std::string::npos) {
    const double den = to_double(key, v.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument(key + ": zero denominator in '" + v + "'");
    return to_double(key, v.substr(0, slash)) / den;
  }
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x) || std::abs(x) > 1e9) throw std::invalid_argument(key + ": expected an integer, got '" + v + "'");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument(key + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

DataSpec parse_data(const std::string& v, const std::filesystem::path& base_dir) {
  static const std::regex call(R"(^\s*(\w+)\s*\((.*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(v, m, call)) throw std::invalid_argument("data: expected gaussian(...), mode(...) or file(...)");
  const std::string kind = m[1];
  const std::string inner = m[2];
  DataSpec d;
  if (kind == "file") {
    d.kind = DataSpec::Kind::file;
    d.path = trim(inner);
    if (d.path.empty()) throw std::invalid_argument("data: file() needs a path");
    if (d.path.is_relative() && !base_dir.empty()) d.path = base_dir / d.path;
    return d;
  }
  const auto args = split_list(inner);
  if (kind == "gaussian") {
    if (args.empty() || args.size() > 3) throw std::invalid_argument("data: gaussian(amplitude[, width[, center]])");
    d.kind = DataSpec::Kind::gaussian;
    d.amplitude = to_double("data", args[0]);
    if (args.size() > 1) d.width = to_double("data", args[1]);
    if (args.size() > 2) d.center = to_double("data", args[2]);
    if (!(d.width > 0.0)) throw std::invalid_argument("data: gaussian width must be positive");
    return d;
  }
  if (kind == "mode") {
    if (args.size() != 2) throw std::invalid_argument("data: mode(k, amplitude)");
    d.kind = DataSpec::Kind::mode;
    d.mode = to_int("data", args[0]);
    d.amplitude = to_double("data", args[1]);
    return d;
  }
  throw std::invalid_argument("data: unknown kind '" + kind + "'");
}

Solver parse_solver(const std::string& v) {
  if (v == "spectral") return Solver::spectral;
  if (v == "radial-wave") return Solver::radial_wave;
  if (v == "both") return Solver::both;
  throw std::invalid_argument("solver: expected spectral, radial-wave or both, got '" + v + "'");
}

Regime parse_regime(const std::string& v) {
  for (Regime r : {Regime::none, Regime::h1_global_1d, Regime::h1_global_2d, Regime::hs_local_2d,
                   Regime::radial_subcritical, Regime::radial_critical_small})
    if (to_string(r) == v) return r;
  throw std::invalid_argument("regime: unknown regime '" + v + "'");
}

void hypothesis(bool ok, const Scenario& sc, const std::string& what) {
  if (!ok) throw HypothesisError("scenario '" + sc.name + "': " + what);
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ||u0||_{H^1(R^3)} of the scenario's radial data.
double radial_h1_norm(const Scenario& sc) {
  if (sc.data.kind == DataSpec::Kind::gaussian) {
    const double a = sc.data.amplitude, w = sc.data.width;
    return std::abs(a) * std::sqrt(std::pow(std::numbers::pi * w * w / 2.0, 1.5) * (1.0 + 3.0 / (w * w)));
  }
  const auto f = radial::read_profile(sc.data.path);
  const double l2 = radial::radial_l2_norm(f), h1 = radial::radial_sobolev_norm(f, 1.0);
  return std::sqrt(l2 * l2 + h1 * h1);
}

}  // namespace

std::string DataSpec::str() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::gaussian: os << "gaussian(" << amplitude << ", " << width << ", " << center << ")"; break;
    case Kind::mode: os << "mode(" << mode << ", " << amplitude << ")"; break;
    case Kind::file: os << "file(" << path.string() << ")"; break;
  }
  return os.str();
}

double Scenario::tolerance(const std::string& check) const {
  if (auto it = tolerances.find(check); it != tolerances.end()) return it->second;
  if (auto it = kDefaultTolerances.find(check); it != kDefaultTolerances.end()) return it->second;
  return 0.0;
}

bool Scenario::has_check(const std::string& check) const {
  return std::find(checks.begin(), checks.end(), check) != checks.end();
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"l2_identity", "h1_identity", "gradient_monotone", "hs_growth",
                                                 "h2_inequality", "scaling",   "duhamel",           "equivalence",
                                                 "strauss",     "weighted_strichartz", "maximal",   "hardy"};
  return names;
}

std::string to_string(Solver s) {
  switch (s) {
    case Solver::spectral: return "spectral";
    case Solver::radial_wave: return "radial-wave";
    case Solver::both: return "both";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::none: return "none";
    case Regime::h1_global_1d: return "h1_global_1d";
    case Regime::h1_global_2d: return "h1_global_2d";
    case Regime::hs_local_2d: return "hs_local_2d";
    case Regime::radial_subcritical: return "radial_subcritical";
    case Regime::radial_critical_small: return "radial_critical_small";
  }
  return "?";
}

void assign(Scenario& sc, const std::string& key, const std::string& value, const std::filesystem::path& base_dir) {
  if (key == "n") sc.n = to_int(key, value);
  else if (key == "p") sc.p = to_double(key, value);
  else if (key == "s") sc.s = to_double(key, value);
  else if (key == "N") sc.N = to_int(key, value);
  else if (key == "L") sc.L = to_double(key, value);
  else if (key == "M") sc.M = to_int(key, value);
  else if (key == "R") sc.R = to_double(key, value);
  else if (key == "data") sc.data = parse_data(value, base_dir);
  else if (key == "amplitude") sc.data.amplitude = to_double(key, value);
  else if (key == "dt") sc.dt = to_double(key, value);
  else if (key == "T") sc.T = to_double(key, value);
  else if (key == "stride") sc.stride = to_int(key, value);
  else if (key == "dealias") sc.dealias = to_bool(key, value);
  else if (key == "solver") sc.solver = parse_solver(value);
  else if (key == "regime") sc.regime = parse_regime(value);
  else if (key == "h1_bound") sc.h1_bound = to_double(key, value);
  else if (key == "delta") sc.delta = to_double(key, value);
  else if (key == "q1") sc.q1 = to_double(key, value);
  else if (key == "checks") {
    sc.checks = split_list(value);
    for (const auto& c : sc.checks)
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
        throw std::invalid_argument("checks: unknown check '" + c + "'");
  } else if (key.rfind("tol.", 0) == 0) {
    const auto check = key.substr(4);
    if (std::find(known_checks().begin(), known_checks().end(), check) == known_checks().end())
      throw std::invalid_argument(key + ": unknown check '" + check + "'");
    sc.tolerances[check] = to_double(key, value);
  } else
    throw std::invalid_argument("unknown key '" + key + "'");
}

void validate(const Scenario& sc) {
  hypothesis(sc.n >= 1 && sc.n <= 3, sc, "dimension n must be 1, 2 or 3");
  hypothesis(sc.p > 1.0, sc, "power p must exceed 1 (got " + num(sc.p) + ")");
  hypothesis(std::isfinite(sc.s), sc, "Sobolev index s must be finite");
  hypothesis(sc.dt > 0.0 && sc.T > 0.0 && sc.dt <= sc.T, sc, "need 0 < dt <= T");
  hypothesis(sc.stride >= 1, sc, "stride must be >= 1");
  const long steps = static_cast<long>(std::ceil(sc.T / sc.dt - 1e-9));
  hypothesis(steps % sc.stride == 0, sc, "stride must divide the step count " + std::to_string(steps));
  if (sc.uses_spectral()) {
    try {
      spectral::make_grid(sc.n, sc.N, sc.L);
    } catch (const std::invalid_argument& e) {
      hypothesis(false, sc, e.what());
    }
  }
  if (sc.uses_radial()) {
    hypothesis(sc.n == 3, sc, "the radial wave solver works on R^3 (n = 3)");
    hypothesis(sc.M >= 16 && sc.R > 0.0, sc, "radial grid needs M >= 16 and R > 0");
    hypothesis(sc.T < sc.R, sc, "radial wave solver needs T < R (got T = " + num(sc.T) + ", R = " + num(sc.R) + ")");
    hypothesis(sc.data.kind != DataSpec::Kind::mode, sc, "the radial solver needs radial data; mode(...) is not radial");
    hypothesis(sc.data.kind != DataSpec::Kind::gaussian || sc.data.center == 0.0, sc,
               "the radial solver needs radial data; the Gaussian must be centred at the origin");
    hypothesis(sc.solver != Solver::both || sc.data.kind != DataSpec::Kind::file, sc,
               "solver 'both' needs analytic data (a file holds either a field or a profile)");
  }

  const double n = sc.n, p = sc.p, s = sc.s;
  switch (sc.regime) {
    case Regime::none: break;
    case Regime::h1_global_1d:
      hypothesis(sc.n == 1, sc, "regime h1_global_1d (global H^1 theory on the line) needs n = 1");
      break;
    case Regime::h1_global_2d:
      hypothesis(sc.n == 2, sc, "regime h1_global_2d (global H^1 theory in the plane) needs n = 2");
      break;
    case Regime::hs_local_2d:
      hypothesis(sc.n == 2, sc, "regime hs_local_2d needs n = 2");
      hypothesis(s > 0.75 && s < p, sc, "regime hs_local_2d needs 3/4 < s < p (got s = " + num(s) + ", p = " + num(p) + ")");
      break;
    case Regime::radial_subcritical:
      hypothesis(sc.n == 3 && sc.uses_radial(), sc, "regime radial_subcritical needs n = 3 and the radial solver");
      hypothesis(p < 1.0 + 2.0 / (n - 2.0), sc,
                 "regime radial_subcritical needs 1 < p < 1 + 2/(n-2) = 3 (got p = " + num(p) + ")");
      break;
    case Regime::radial_critical_small: {
      hypothesis(sc.n == 3 && sc.uses_radial(), sc, "regime radial_critical_small needs n = 3 and the radial solver");
      hypothesis(p == 3.0, sc, "regime radial_critical_small is the cubic case p = 3 (got p = " + num(p) + ")");
      const double h1 = radial_h1_norm(sc);
      hypothesis(h1 <= sc.h1_bound, sc,
                 "regime radial_critical_small needs small data: ||u0||_H1 = " + num(h1) + " exceeds h1_bound = " +
                     num(sc.h1_bound));
      break;
    }
  }

  for (const auto& c : sc.checks) {
    const bool spectral_only = c == "hs_growth" || c == "h2_inequality" || c == "scaling" || c == "duhamel";
    hypothesis(!spectral_only || sc.uses_spectral(), sc, "check '" + c + "' needs the spectral solver");
    if (c == "hs_growth") {
      hypothesis(sc.n <= 2, sc, "check hs_growth is stated for n <= 2");
      hypothesis(s > n / 2 && s < std::min(2.0, p), sc,
                 "check hs_growth needs n/2 < s < min(2, p) (got s = " + num(s) + ")");
    } else if (c == "h2_inequality") {
      hypothesis(p == 3.0, sc, "check h2_inequality holds for the cubic nonlinearity only (p = 3)");
    } else if (c == "equivalence") {
      hypothesis(sc.solver == Solver::both, sc, "check equivalence compares both solvers (solver = both)");
    } else if (c == "strauss") {
      hypothesis(sc.n >= 2, sc, "check strauss needs n >= 2");
      hypothesis(s > 0.5 && s < n / 2, sc, "check strauss needs 1/2 < s < n/2 (got s = " + num(s) + ")");
    } else if (c == "weighted_strichartz") {
      hypothesis(sc.delta > 0.0 && sc.q1 >= 2.0, sc, "check weighted_strichartz needs delta > 0 and q1 >= 2");
    } else if (c == "maximal" || c == "hardy") {
      hypothesis(sc.uses_radial(), sc, "check '" + c + "' works on radial profiles (radial solver)");
    } else if (c == "duhamel") {
      hypothesis(steps / sc.stride >= 2, sc, "check duhamel needs at least three snapshots");
    }
  }
}

std::vector<Scenario> parse_config(std::istream& is, const std::filesystem::path& base_dir) {
  static const std::regex header(R"(^\[scenario\.([A-Za-z0-9_\-]+)\]$)");
  std::vector<Scenario> out;
  bool explicit_N = false, explicit_L = false;
  auto finish = [&] {
    if (out.empty()) return;
    Scenario& sc = out.back();
    static const int defaultN[] = {256, 128, 64};
    static const double defaultL[] = {40.0, 30.0, 20.0};
    if (sc.n >= 1 && sc.n <= 3) {
      if (!explicit_N) sc.N = defaultN[sc.n - 1];
      if (!explicit_L) sc.L = defaultL[sc.n - 1];
    }
  };

  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::smatch m;
    if (line.front() == '[') {
      if (!std::regex_match(line, m, header)) throw ParseError(lineno, "expected a [scenario.<name>] header");
      finish();
      for (const auto& sc : out)
        if (sc.name == m[1]) throw ParseError(lineno, "duplicate scenario '" + std::string(m[1]) + "'");
      out.emplace_back();
      out.back().name = m[1];
      explicit_N = explicit_L = false;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    if (out.empty()) throw ParseError(lineno, "assignment outside a [scenario.<name>] section");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(lineno, "expected 'key = value'");
    try {
      assign(out.back(), key, value, base_dir);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    explicit_N |= key == "N";
    explicit_L |= key == "L";
  }
  finish();
  for (const auto& sc : out) validate(sc);
  return out;
}

std::vector<Scenario> load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path.string());
  return parse_config(is, path.parent_path());
}

}  // namespace semirelax::runner
