#pragma once

#include "semirelax/diagnostics/records.hpp"
#include "semirelax/propagator/trajectory.hpp"
#include "semirelax/radial/profile.hpp"
#include "semirelax/spectral/field.hpp"

namespace semirelax::diagnostics {

// Ratio probes return 0 for identically zero input (0/0 convention).

/// sup_x |x|^{n/2-s} |f(x)| / ||f||_{dot-H^s} for a radial field on an
/// n-dimensional grid (n >= 2, |x| measured from the grid centre).
/// Throws std::invalid_argument unless 1/2 < s < n/2.
double strauss_ratio(const spectral::Field& f, double s);
/// The same for a radial profile on R^3 (n must be 3).
double strauss_ratio(const radial::RadialProfile& f, int n, double s);

/// (int_0^T || [x]_delta^{-1/q1} u(t) ||_{L^2}^{q1} dt)^{1/q1} / ||u(0)||_{L^2}
/// by the trapezoidal rule over the snapshots. The trajectory must come from
/// the free propagator (HypothesisError otherwise); q1 >= 2, delta > 0.
double weighted_strichartz_ratio(const propagator::Trajectory& traj, double delta, double q1);
double weighted_strichartz_ratio(const radial::RadialTrajectory& traj, double delta, double q1);

/// lhs = (int_0^Tmax sup_r |d/dt J[f](t, r)|^2 dt)^{1/2} with the closed-form
/// time derivative, sup over r on the profile's node spacing out to R + t,
/// trapezoid on `time_steps` intervals; rhs = ||r f'||_{L^2(0,inf)} with f'
/// from fourth-order differences. When rhs vanishes the constant is infinite
/// and a note flags the input as outside the weighted space; `holds` means
/// the constant is finite.
/// Tmax <= 0 selects 4R. Throws std::domain_error on non-finite samples.
BoundReport hardy_time_derivative_check(const radial::RadialProfile& f, double Tmax = 0.0, int time_steps = 400);

}  // namespace semirelax::diagnostics
