#include "semirelax/propagator/stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "semirelax/errors.hpp"
#include "semirelax/spectral/multiplier.hpp"

namespace semirelax::propagator {

using spectral::cplx;
using spectral::Grid;
using spectral::Representation;

// --- StepperConfig / Trajectory -------------------------------------------------

void StepperConfig::validate() const {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("nonlinearity power must satisfy p > 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  if (!(final_time >= 0.0) || !std::isfinite(final_time)) throw std::invalid_argument("final time must be >= 0");
  if (final_time > 0.0 && dt > final_time * (1.0 + 1e-12))
    throw std::invalid_argument("time step exceeds final time");
  if (snapshot_stride < 1) throw std::invalid_argument("snapshot stride must be >= 1");
  if (!(nonlinear_coefficient >= 0.0) || !std::isfinite(nonlinear_coefficient))
    throw std::invalid_argument("nonlinear coefficient must be finite and >= 0");
  if (step_count() % snapshot_stride != 0)
    throw std::invalid_argument("snapshot stride must divide the step count " + std::to_string(step_count()));
}

long StepperConfig::step_count() const {
  if (final_time == 0.0) return 0;
  return static_cast<long>(std::ceil(final_time / dt * (1.0 - 1e-12)));
}

double StepperConfig::effective_dt() const {
  const long n = step_count();
  return n == 0 ? dt : final_time / static_cast<double>(n);
}

bool StepperConfig::dealiasing_active() const {
  if (!dealias || nonlinear_coefficient == 0.0) return false;
  return p == std::round(p) && static_cast<long>(p) % 2 == 1 && p <= 5.0;
}

double Trajectory::snapshot_spacing() const {
  if (times.size() < 2) return config.effective_dt() * config.snapshot_stride;
  return times[1] - times[0];
}

std::size_t Trajectory::index_of(double t) const {
  if (times.empty()) throw std::invalid_argument("empty trajectory");
  const double h = snapshot_spacing();
  const double pos = t / h;
  const long i = std::lround(pos);
  if (i < 0 || static_cast<std::size_t>(i) >= times.size() || std::abs(times[i] - t) > 1e-9 * h)
    throw std::invalid_argument("time " + std::to_string(t) + " is not a snapshot time");
  return static_cast<std::size_t>(i);
}

// --- substeps -------------------------------------------------------------------

namespace {

std::vector<cplx> phase_table(const Grid& g, double tau) {
  const auto k = spectral::wavenumber_magnitudes(g);
  std::vector<cplx> t(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) t[i] = std::polar(1.0, -tau * k[i]);
  return t;
}

void nonlinear_inplace(std::span<cplx> u, double tau, double p, double coefficient) {
  if (coefficient == 0.0 || tau == 0.0) return;
  const double c = (p - 1.0) * coefficient * tau;
  if (p == 3.0) {
    for (auto& v : u) v /= std::sqrt(1.0 + c * std::norm(v));
    return;
  }
  const double e = -1.0 / (p - 1.0);
  for (auto& v : u) {
    const double rho = std::abs(v);
    if (rho == 0.0) continue;
    v *= std::pow(1.0 + c * std::pow(rho, p - 1.0), e);
  }
}

std::vector<char> dealias_mask(const Grid& g) {
  std::vector<char> keep(g.size(), 1);
  const int cut = g.points() / 3;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto idx = g.unflatten(i);
    for (int a = 0; a < g.dim(); ++a)
      if (std::abs(g.mode_number(idx[a])) > cut) keep[i] = 0;
  }
  return keep;
}

// Advances a spectral state in place; keeps all lookup tables for one config.
class SplitStepper {
 public:
  SplitStepper(const Grid& grid, const StepperConfig& cfg)
      : cfg_(cfg), dt_(cfg.effective_dt()), dealias_(cfg.dealiasing_active()) {
    half_ = phase_table(grid, 0.5 * dt_);
    full_ = phase_table(grid, dt_);
    if (dealias_) keep_ = dealias_mask(grid);
  }

  void advance(Field& s) const {
    if (cfg_.scheme == SplittingScheme::strang) {
      multiply(s, half_);
      nonlinear(s);
      multiply(s, half_);
    } else {
      nonlinear(s);
      multiply(s, full_);
    }
  }

 private:
  static void multiply(Field& s, const std::vector<cplx>& table) {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= table[i];
  }

  void nonlinear(Field& s) const {
    if (cfg_.nonlinear_coefficient == 0.0) return;
    s.transform_to(Representation::physical);
    nonlinear_inplace(s.values(), dt_, cfg_.p, cfg_.nonlinear_coefficient);
    s.transform_to(Representation::spectral);
    if (dealias_)
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!keep_[i]) s[i] = 0.0;
  }

  StepperConfig cfg_;
  double dt_;
  bool dealias_;
  std::vector<cplx> half_, full_;
  std::vector<char> keep_;
};

double spectral_l2(const Field& s) {
  double acc = 0.0;
  for (const auto& v : s.values()) acc += std::norm(v);
  return std::sqrt(acc / std::pow(s.grid().length(), s.grid().dim()));
}

}  // namespace

Field linear_step(const Field& f, double tau) {
  return spectral::apply_multiplier_table(f, phase_table(f.grid(), tau), spectral::SymbolParity::even_per_axis);
}

Field nonlinear_step(const Field& f, double tau, double p, double coefficient) {
  if (!(tau >= 0.0)) throw std::invalid_argument("nonlinear substep needs tau >= 0");
  if (!(p > 1.0)) throw std::invalid_argument("nonlinearity power must satisfy p > 1");
  Field out = f.to_physical();
  nonlinear_inplace(out.values(), tau, p, coefficient);
  return out;
}

void dealias_two_thirds(Field& s) {
  if (s.is_physical()) throw std::logic_error("dealias_two_thirds expects a spectral field");
  const auto keep = dealias_mask(s.grid());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!keep[i]) s[i] = 0.0;
}

Field split_step(const Field& f, const StepperConfig& cfg) {
  if (!(cfg.p > 1.0)) throw std::invalid_argument("nonlinearity power must satisfy p > 1");
  StepperConfig one = cfg;
  one.final_time = cfg.dt;
  Field s = f.to_spectral();
  SplitStepper(f.grid(), one).advance(s);
  s.transform_to(Representation::physical);
  return s;
}

Field strang_step(const Field& f, const StepperConfig& cfg) {
  StepperConfig c = cfg;
  c.scheme = SplittingScheme::strang;
  return split_step(f, c);
}

Trajectory evolve(const Field& u0, const StepperConfig& cfg) {
  cfg.validate();
  if (!u0.all_finite()) throw NumericalError(0, "initial data is not finite");
  Trajectory traj;
  traj.config = cfg;
  const long steps = cfg.step_count();
  const double dt = cfg.effective_dt();
  traj.times.reserve(steps / cfg.snapshot_stride + 1);
  traj.snapshots.reserve(steps / cfg.snapshot_stride + 1);
  traj.times.push_back(0.0);
  traj.snapshots.push_back(u0.to_physical());

  Field state = u0.to_spectral();
  const SplitStepper stepper(u0.grid(), cfg);
  const double norm0 = spectral_l2(state);
  double previous = norm0;
  for (long n = 1; n <= steps; ++n) {
    stepper.advance(state);
    if (!state.all_finite()) throw NumericalError(n, "non-finite value in solution (time step too large?)");
    const double current = spectral_l2(state);
    if (current > previous + 1e-10 * norm0)
      throw NumericalError(n, "L2 norm increased; discrete dissipation violated");
    previous = current;
    if (n % cfg.snapshot_stride == 0) {
      traj.times.push_back(static_cast<double>(n) * dt);
      traj.snapshots.push_back(state.to_physical());
    }
  }
  return traj;
}

double duhamel_residual(const Trajectory& traj) {
  if (traj.size() < 3) throw std::invalid_argument("Duhamel residual needs at least 3 snapshots");
  const Grid& g = traj.grid();
  const double t = traj.times.back();
  const double p = traj.config.p;
  const double kappa = traj.config.nonlinear_coefficient;

  Field acc(g, Representation::spectral);
  if (kappa != 0.0) {
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const double w = 0.5 * ((k > 0 ? traj.times[k] - traj.times[k - 1] : 0.0) +
                              (k + 1 < traj.size() ? traj.times[k + 1] - traj.times[k] : 0.0));
      Field nl = traj.snapshots[k].to_physical();
      for (auto& v : nl.values()) v *= std::pow(std::abs(v), p - 1.0);
      nl.transform_to(Representation::spectral);
      const auto phase = phase_table(g, t - traj.times[k]);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * phase[i] * nl[i];
    }
  }
  Field res = traj.snapshots.back().to_spectral();
  const Field free = linear_step(traj.snapshots.front(), t).to_spectral();
  for (std::size_t i = 0; i < res.size(); ++i) res[i] += kappa * acc[i] - free[i];
  return spectral_l2(res);
}

}  // namespace semirelax::propagator
