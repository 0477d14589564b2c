#include "semirelax/radial/wave_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "semirelax/errors.hpp"
#include "semirelax/radial/halfwave.hpp"
#include "semirelax/radial/interpolation.hpp"
#include "semirelax/radial/kernels.hpp"
#include "semirelax/radial/source.hpp"

namespace semirelax::radial {

namespace {

long steps_for(double dt, double T, int stride) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw std::invalid_argument("final time must be nonnegative");
  if (stride < 1) throw std::invalid_argument("snapshot stride must be >= 1");
  const long steps = T == 0.0 ? 0 : static_cast<long>(std::ceil(T / dt * (1.0 - 1e-12)));
  if (steps % stride != 0) throw std::invalid_argument("snapshot stride must divide the number of steps");
  return steps;
}

}  // namespace

RadialTrajectory wave_evolve(const RadialProfile& u0, double p, double dt, double T, WaveOptions options) {
  if (!(p > 1.0)) throw std::invalid_argument("power p must exceed 1");
  if (!(T < u0.extent()))
    throw HypothesisError("wave form needs T < R so that the domain of dependence stays inside the radial grid");
  if (!u0.all_finite()) throw NumericalError(0, "initial profile is not finite");
  const long steps = steps_for(dt, T, options.stride);
  const double h = steps ? T / steps : dt;
  const int M = u0.samples();

  RadialProfile a0 = radial_halfwave_operator(u0);
  for (int k = 0; k < M; ++k) {
    a0[k] *= cplx(0.0, -1.0);
    if (options.nonlinear) a0[k] -= std::pow(std::abs(u0[k]), p - 1.0) * u0[k];
  }
  const CubicInterpolant data(u0), velocity(a0);

  RadialTrajectory out;
  out.dt = h;
  out.linear = !options.nonlinear;
  out.times.push_back(0.0);
  out.profiles.push_back(u0);

  std::vector<CubicInterpolant> sources;
  if (options.nonlinear) sources.emplace_back(nonlinear_source(u0, p));

  for (long n = 1; n <= steps; ++n) {
    const double t = n * h;
    RadialProfile u(u0.extent(), M);
    for (int k = 0; k < M; ++k) {
      const double r = u.node(k);
      cplx v = dJ_dt(data, t, r) + J_kernel(velocity, t, r);
      if (options.nonlinear) {
        // Trapezoid over t_m = m h, m = 0..n; the m = n term is J(0) = 0.
        cplx acc = 0.5 * J_kernel(sources[0], t, r);
        for (long m = 1; m < n; ++m) acc += J_kernel(sources[m], t - m * h, r);
        v += h * acc;
      }
      u[k] = v;
    }
    if (!u.all_finite()) throw NumericalError(n, "radial wave solution became non-finite");
    if (options.nonlinear) sources.emplace_back(nonlinear_source(u, p));
    if (n % options.stride == 0) {
      out.times.push_back(t);
      out.profiles.push_back(std::move(u));
    }
  }
  return out;
}

RadialTrajectory radial_linear_evolve(const RadialProfile& u0, double dt, double T, int stride) {
  const long steps = steps_for(dt, T, stride);
  const double h = steps ? T / steps : dt;
  RadialTrajectory out;
  out.dt = h;
  out.linear = true;
  for (long n = 0; n <= steps; n += stride) {
    out.times.push_back(n * h);
    out.profiles.push_back(n == 0 ? u0 : radial_linear_step(u0, n * h));
  }
  return out;
}

}  // namespace semirelax::radial
