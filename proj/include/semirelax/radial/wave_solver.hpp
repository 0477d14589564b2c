#pragma once

#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

struct WaveOptions {
  /// Store every `stride`-th step (and t = 0). Must divide the step count.
  int stride = 1;
  /// false drops |u|^{p-1} u everywhere, leaving the free wave form.
  bool nonlinear = true;
};

/// Solves the radial wave form of i u_t - D u = -i |u|^{p-1} u on R^3,
///   u(t) = d/dt J[u0](t) + J[-i D u0 - |u0|^{p-1} u0](t) + int_0^t J[F_p(u(t'))](t - t') dt',
/// marching in steps of dt with the trapezoidal rule for the time integral.
/// The endpoint term J[F_p(u(t))](0) vanishes, so each step is explicit.
/// Steps: ceil(T / dt) with dt shrunk to land on T.
/// Throws HypothesisError if T >= R, NumericalError on non-finite values.
RadialTrajectory wave_evolve(const RadialProfile& u0, double p, double dt, double T, WaveOptions options = {});

/// e^{-i t D} u0 at t = 0, dt, ..., T through the radial sine multiplier.
RadialTrajectory radial_linear_evolve(const RadialProfile& u0, double dt, double T, int stride = 1);

}  // namespace semirelax::radial
