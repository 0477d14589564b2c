#pragma once

#include <functional>

#include "semirelax/propagator/trajectory.hpp"
#include "semirelax/radial/profile.hpp"
#include "semirelax/spectral/field.hpp"

namespace semirelax::spectral {

/// H^s when inhomogeneous (multiplier (1+|xi|^2)^{s/2}), dot-H^s otherwise
/// (multiplier |xi|^s, taken as 0 at xi = 0 when s != 0).
struct SobolevSpec {
  double s = 0.0;
  bool homogeneous = false;
};

/// (sum |f|^p dx^n)^{1/p}; max |f| when p is +infinity. Throws on p < 1.
double lp_norm(const Field& f, double p);

/// Throws std::domain_error for a homogeneous norm with s < 0 when the mean
/// (xi = 0 coefficient) does not vanish.
double sobolev_norm(const Field& f, SobolevSpec spec);

/// B^s_{r,2}: l^2 over Littlewood-Paley blocks of 2^{js} ||Delta_j f||_{L^r},
/// with the low-frequency block carrying weight 1.
double besov_norm(const Field& f, double s, double r);

/// [x]_delta = |x|^{1-delta} + |x|^{1+delta}.
double bracket_weight(double abs_x, double delta);

/// L^2 norm of [x]_delta^{sign/q} f. For sign = -1 the x = 0 sample is dropped.
double weighted_norm(const Field& f, double delta, double q, int sign);
/// Same for a radial profile, with the R^3 measure 4 pi r^2 dr.
double weighted_norm(const radial::RadialProfile& f, double delta, double q, int sign);

using SpatialNorm = std::function<double(const Field&)>;

/// (int_0^T ||u(t)||^q dt)^{1/q} by the trapezoidal rule over snapshots,
/// max over snapshots for q = infinity. Needs >= 2 snapshots for finite q.
double space_time_norm(const propagator::Trajectory& traj, double q, const SpatialNorm& spatial);
/// The same quadrature applied to already-evaluated spatial norms.
double space_time_norm(std::span<const double> times, std::span<const double> norms, double q);

}  // namespace semirelax::spectral
