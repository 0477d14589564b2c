#pragma once

#include <functional>
#include <span>

#include "semirelax/diagnostics/records.hpp"
#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

/// Centred Hardy-Littlewood maximal function sup_{h>0} (1/2h) int_{t-h}^{t+h} |f|
/// of the piecewise-linear interpolant of samples f_i at x_i = origin + i*spacing
/// (zero outside [x_0, x_last]). Averages are exact for the interpolant and
/// so is the supremum: on each piece between radii |x_i - t| the stationary
/// points solve a quadratic.
/// Throws std::invalid_argument on an empty sample set.
double maximal_function(std::span<const double> samples, double origin, double spacing, double t);

/// M[A f](t) for the even extension A f(x) = f(|x|) of a radial profile,
/// built on the symmetric staggered grid +-r_k.
double maximal_function_radial(const RadialProfile& f, double t);

/// sup over nodes r of (1/2r) int_{|r-t|}^{r+t} |f|, with |f| interpolated
/// exactly as in maximal_function_radial (so the two are directly comparable).
double spherical_average_sup(const RadialProfile& f, double t);

/// lhs = (int_0^T sup_r |J[f](t, r)|^2 dt)^{1/2} on `time_steps` uniform
/// intervals (trapezoid), rhs = ||f||_{L^2(R^3)}; constant lhs / rhs
/// (0 for the zero profile).
diagnostics::BoundReport maximal_bound_check(const RadialProfile& f, double T, int time_steps = 200);

/// Duhamel form with source h(t) = phi(t) f:
/// lhs = || sup_r | int_0^t J[h(t')](t - t', r) dt' | ||_{L^2(0,T)},
/// rhs = int_0^T ||h(t)||_{L^2(R^3)} dt.
diagnostics::BoundReport duhamel_maximal_bound_check(const RadialProfile& f, const std::function<double(double)>& phi,
                                                     double T, int time_steps = 200);

}  // namespace semirelax::radial
