#pragma once

#include <functional>
#include <span>
#include <vector>

#include "semirelax/propagator/trajectory.hpp"
#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

/// Values of a 3D periodic field at the points (r, 0, 0), by exact
/// trigonometric interpolation (unpaired Nyquist modes ignored).
std::vector<cplx> sample_on_axis(const spectral::Field& f, std::span<const double> radii);

/// Samples a radial function on a 3D grid, u(x) = g(|x|).
spectral::Field radial_field(const spectral::Grid& grid, const std::function<cplx(double)>& g);

struct EquivalenceReport {
  /// max over common times and compared radii of |u_3d - u_radial|,
  /// divided by max |u_3d| over the same set.
  double relative_linf = 0.0;
  /// Per common time, the same quantity restricted to that time.
  std::vector<double> times;
  std::vector<double> relative_by_time;
  int compared_radii = 0;
};

/// Compares a 3D spectral trajectory with a radial one at their common
/// snapshot times, on the radial nodes r_k <= r_max.
EquivalenceReport compare_radial_spectral(const propagator::Trajectory& spectral3d, const RadialTrajectory& radial,
                                          double r_max);

}  // namespace semirelax::radial
