#include "semirelax/spectral/snapshot_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "semirelax/errors.hpp"

namespace semirelax::spectral {

namespace {
std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

void write_field(std::ostream& os, const Field& f) {
  const Grid& g = f.grid();
  os << g.dim() << ' ' << g.points() << ' ' << format17(g.length()) << ' '
     << (f.is_physical() ? "physical" : "spectral") << '\n';
  for (const auto& v : f.values()) os << format17(v.real()) << ' ' << format17(v.imag()) << '\n';
}

void write_field(const std::filesystem::path& path, const Field& f) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  write_field(os, f);
  if (!os) throw IoError("failed writing " + path.string());
}

Field read_field(std::istream& is) {
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line)) throw ParseError(lineno, "missing snapshot header");
  std::istringstream header(line);
  int n = 0, points = 0;
  double length = 0.0;
  std::string rep;
  if (!(header >> n >> points >> length >> rep)) throw ParseError(lineno, "header must be 'n N L representation'");
  if (rep != "physical" && rep != "spectral") throw ParseError(lineno, "unknown representation '" + rep + "'");
  Grid grid = [&] {
    try {
      return make_grid(n, points, length);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }();
  std::vector<cplx> values(grid.size());
  for (auto& v : values) {
    ++lineno;
    if (!std::getline(is, line)) throw ParseError(lineno, "unexpected end of snapshot data");
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) throw ParseError(lineno, "expected 're im'");
    v = {re, im};
  }
  return Field(grid, std::move(values), rep == "physical" ? Representation::physical : Representation::spectral);
}

Field read_field(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  return read_field(is);
}

}  // namespace semirelax::spectral
