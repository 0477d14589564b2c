#pragma once

#include <cstddef>
#include <vector>

#include "semirelax/spectral/field.hpp"

namespace semirelax::propagator {

enum class SplittingScheme { strang, lie };

/// Time-stepping parameters for i u_t - D u = -i kappa |u|^{p-1} u.
/// `nonlinear_coefficient` is kappa; it is 1 for the physical problem and 0
/// for the free (linear) flow.
struct StepperConfig {
  double p = 3.0;
  double dt = 1e-3;
  double final_time = 1.0;
  SplittingScheme scheme = SplittingScheme::strang;
  int snapshot_stride = 1;
  /// 2/3-rule truncation after each nonlinear substep; only active for odd
  /// integer p <= 5.
  bool dealias = true;
  double nonlinear_coefficient = 1.0;

  /// Throws std::invalid_argument on p <= 1, dt <= 0, T < 0, dt > T > 0, stride < 1.
  void validate() const;
  /// Number of steps: ceil(T / dt), with dt then shrunk to T / steps.
  long step_count() const;
  double effective_dt() const;
  bool dealiasing_active() const;
};

/// Snapshots of one evolution, uniformly spaced by dt * snapshot_stride.
struct Trajectory {
  StepperConfig config;
  std::vector<double> times;
  std::vector<spectral::Field> snapshots;

  const spectral::Grid& grid() const { return snapshots.front().grid(); }
  std::size_t size() const noexcept { return snapshots.size(); }
  bool empty() const noexcept { return snapshots.empty(); }
  bool is_linear() const noexcept { return config.nonlinear_coefficient == 0.0; }
  /// Spacing between consecutive snapshot times.
  double snapshot_spacing() const;
  /// Index of the snapshot at time t; throws std::invalid_argument if t is
  /// not a snapshot time (to within 1e-9 of the spacing).
  std::size_t index_of(double t) const;
};

}  // namespace semirelax::propagator
