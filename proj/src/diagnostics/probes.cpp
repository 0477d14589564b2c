#include "semirelax/diagnostics/probes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "semirelax/errors.hpp"
#include "semirelax/radial/halfwave.hpp"
#include "semirelax/radial/kernels.hpp"
#include "semirelax/spectral/norms.hpp"

namespace semirelax::diagnostics {

namespace {

void require_strauss_range(int n, double s) {
  if (n < 2) throw std::invalid_argument("Strauss ratio needs dimension n >= 2");
  if (!(s > 0.5 && s < 0.5 * n))
    throw std::invalid_argument("Strauss ratio needs 1/2 < s < n/2 (got s = " + std::to_string(s) + ")");
}

double ratio_or_zero(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

}  // namespace

double strauss_ratio(const spectral::Field& f, double s) {
  const auto& g = f.grid();
  require_strauss_range(g.dim(), s);
  const spectral::Field phys = f.to_physical();
  const double power = 0.5 * g.dim() - s;
  double sup = 0.0;
  for (std::size_t i = 0; i < phys.size(); ++i) {
    const auto x = g.position(i);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    sup = std::max(sup, std::pow(r, power) * std::abs(phys[i]));
  }
  return ratio_or_zero(sup, spectral::sobolev_norm(f, {s, true}));
}

double strauss_ratio(const radial::RadialProfile& f, int n, double s) {
  if (n != 3) throw std::invalid_argument("radial profiles live on R^3; Strauss ratio needs n = 3");
  require_strauss_range(n, s);
  double sup = 0.0;
  for (int k = 0; k < f.samples(); ++k) sup = std::max(sup, std::pow(f.node(k), 1.5 - s) * std::abs(f[k]));
  return ratio_or_zero(sup, radial::radial_sobolev_norm(f, s));
}

namespace {

void require_strichartz_params(double delta, double q1) {
  if (!(delta > 0.0)) throw std::invalid_argument("weight parameter delta must be positive");
  if (!(q1 >= 2.0)) throw std::invalid_argument("time exponent q1 must be >= 2");
}

}  // namespace

double weighted_strichartz_ratio(const propagator::Trajectory& traj, double delta, double q1) {
  require_strichartz_params(delta, q1);
  if (!traj.is_linear())
    throw HypothesisError("weighted Strichartz ratio is defined for free-propagator trajectories only");
  if (traj.empty()) throw std::invalid_argument("empty trajectory");
  const double data = spectral::lp_norm(traj.snapshots.front(), 2.0);
  if (data == 0.0) return 0.0;
  const double lhs = spectral::space_time_norm(
      traj, q1, [&](const spectral::Field& u) { return spectral::weighted_norm(u, delta, q1, -1); });
  return lhs / data;
}

double weighted_strichartz_ratio(const radial::RadialTrajectory& traj, double delta, double q1) {
  require_strichartz_params(delta, q1);
  if (!traj.linear)
    throw HypothesisError("weighted Strichartz ratio is defined for free-propagator trajectories only");
  if (traj.profiles.empty()) throw std::invalid_argument("empty trajectory");
  const double data = radial::radial_l2_norm(traj.profiles.front());
  if (data == 0.0) return 0.0;
  std::vector<double> norms;
  norms.reserve(traj.profiles.size());
  for (const auto& u : traj.profiles) norms.push_back(spectral::weighted_norm(u, delta, q1, -1));
  return spectral::space_time_norm(traj.times, norms, q1) / data;
}

BoundReport hardy_time_derivative_check(const radial::RadialProfile& f, double Tmax, int time_steps) {
  if (!f.all_finite()) throw std::domain_error("profile has non-finite samples");
  if (time_steps < 2) throw std::invalid_argument("need at least two time steps");
  const double R = f.extent();
  const double h = f.spacing();
  if (!(Tmax > 0.0)) Tmax = 4.0 * R;

  const radial::CubicInterpolant interp(f);
  std::vector<double> times(time_steps + 1), sups(time_steps + 1);
  for (int j = 0; j <= time_steps; ++j) {
    const double t = Tmax * j / time_steps;
    double sup = 0.0;
    for (double r = 0.5 * h; r <= R + t; r += h) sup = std::max(sup, std::abs(radial::dJ_dt(interp, t, r)));
    times[j] = t;
    sups[j] = sup;
  }
  const double lhs = spectral::space_time_norm(times, sups, 2.0);

  const auto df = radial::radial_derivative(f);
  double acc = 0.0;
  for (int k = 0; k < f.samples(); ++k) acc += std::pow(f.node(k) * std::abs(df[k]), 2);
  const double rhs = std::sqrt(acc * h);

  const double constant = rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : INFINITY);
  auto b = BoundReport::make(lhs, rhs, constant);
  b.holds = std::isfinite(constant);
  if (!b.holds) b.notes.push_back("r f' vanishes: the profile lies outside the weighted space, so no finite constant exists");
  return b;
}

}  // namespace semirelax::diagnostics
