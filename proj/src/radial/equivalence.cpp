#include "semirelax/radial/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semirelax::radial {

using spectral::Field;
using spectral::Grid;

std::vector<cplx> sample_on_axis(const Field& f, std::span<const double> radii) {
  const Grid& g = f.grid();
  if (g.dim() != 3) throw std::invalid_argument("axis sampling needs a 3D field");
  const Field s = f.to_spectral();
  const int N = g.points();
  const double x0 = g.coordinate(0);
  // Collapse the y and z sums at y = z = 0: line[kx] = sum_{ky,kz} u_hat e^{i(ky+kz)(0 - x0)}.
  std::vector<cplx> phase(N);
  for (int i = 0; i < N; ++i) phase[i] = std::polar(1.0, -g.wavenumber(i) * x0);
  std::vector<cplx> line(N, cplx(0.0));
  for (int a = 0; a < N; ++a) {
    if (a == N / 2) continue;
    for (int b = 0; b < N; ++b) {
      if (b == N / 2) continue;
      for (int c = 0; c < N; ++c) {
        if (c == N / 2) continue;
        line[a] += s[(static_cast<std::size_t>(a) * N + b) * N + c] * phase[b] * phase[c];
      }
    }
  }
  const double norm = 1.0 / std::pow(g.length(), 3);
  std::vector<cplx> out;
  out.reserve(radii.size());
  for (double r : radii) {
    cplx acc = 0.0;
    for (int a = 0; a < N; ++a)
      if (a != N / 2) acc += line[a] * std::polar(1.0, g.wavenumber(a) * (r - x0));
    out.push_back(norm * acc);
  }
  return out;
}

Field radial_field(const Grid& grid, const std::function<cplx(double)>& g) {
  return Field::sample(grid, [&](const spectral::Vec3& x) { return g(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])); });
}

EquivalenceReport compare_radial_spectral(const propagator::Trajectory& spectral3d, const RadialTrajectory& radial,
                                          double r_max) {
  if (spectral3d.empty() || radial.profiles.empty()) throw std::invalid_argument("empty trajectory");
  const RadialProfile& shape = radial.profiles.front();
  std::vector<double> radii;
  for (int k = 0; k < shape.samples() && shape.node(k) <= r_max; ++k) radii.push_back(shape.node(k));
  if (radii.empty()) throw std::invalid_argument("no radial nodes inside the comparison radius");

  EquivalenceReport rep;
  rep.compared_radii = static_cast<int>(radii.size());
  double worst_diff = 0.0, peak = 0.0;
  std::vector<double> diffs, peaks;
  const double tol = 1e-9 * std::max(radial.dt, spectral3d.config.effective_dt());
  for (std::size_t i = 0; i < spectral3d.size(); ++i) {
    const double t = spectral3d.times[i];
    const auto it = std::find_if(radial.times.begin(), radial.times.end(),
                                 [&](double s) { return std::abs(s - t) <= tol; });
    if (it == radial.times.end()) continue;
    const RadialProfile& rp = radial.profiles[it - radial.times.begin()];
    const auto axis = sample_on_axis(spectral3d.snapshots[i], radii);
    double d = 0.0, m = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      d = std::max(d, std::abs(axis[k] - rp[k]));
      m = std::max(m, std::abs(axis[k]));
    }
    rep.times.push_back(t);
    diffs.push_back(d);
    peaks.push_back(m);
    worst_diff = std::max(worst_diff, d);
    peak = std::max(peak, m);
  }
  if (rep.times.empty()) throw std::invalid_argument("trajectories share no snapshot times");
  for (std::size_t i = 0; i < diffs.size(); ++i) rep.relative_by_time.push_back(peak > 0.0 ? diffs[i] / peak : 0.0);
  rep.relative_linf = peak > 0.0 ? worst_diff / peak : 0.0;
  return rep;
}

}  // namespace semirelax::radial
