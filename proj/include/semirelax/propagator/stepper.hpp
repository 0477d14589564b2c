#pragma once

#include "semirelax/propagator/trajectory.hpp"

namespace semirelax::propagator {

using spectral::Field;

/// U(tau) = e^{-i tau D}: multiplies every mode by e^{-i tau |xi|}.
Field linear_step(const Field& f, double tau);

/// Exact pointwise flow of u_t = -kappa |u|^{p-1} u over time tau >= 0:
///   u <- u (1 + (p-1) kappa |u|^{p-1} tau)^{-1/(p-1)}.
/// The phase of every sample is untouched and the modulus never grows.
Field nonlinear_step(const Field& f, double tau, double p, double coefficient = 1.0);

/// Zeroes modes with |k| > N/3 on any axis (2/3 rule). Expects spectral input.
void dealias_two_thirds(Field& spectral);

/// One step of the configured splitting (Strang: half linear, full
/// nonlinear, half linear; Lie: nonlinear then linear). The result is in
/// physical representation.
Field strang_step(const Field& f, const StepperConfig& cfg);
Field split_step(const Field& f, const StepperConfig& cfg);

/// Evolves u0 for step_count() steps, storing a snapshot every
/// snapshot_stride steps (including t = 0). Throws NumericalError naming
/// the step if a non-finite value appears, or if the L^2 norm ever grows by
/// more than 1e-10 ||u0||.
Trajectory evolve(const Field& u0, const StepperConfig& cfg);

/// || u(t) - U(t) u0 + kappa int_0^t U(t-t') |u|^{p-1} u(t') dt' ||_{L^2} at
/// the final snapshot, with the time integral done by the trapezoidal rule
/// over the stored snapshots. Needs >= 3 snapshots.
double duhamel_residual(const Trajectory& traj);

}  // namespace semirelax::propagator
