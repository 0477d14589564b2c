#include "semirelax/diagnostics/radial_identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "semirelax/radial/halfwave.hpp"

namespace semirelax::diagnostics {

namespace {

using radial::RadialProfile;
using radial::RadialTrajectory;

double shell_integral(const RadialProfile& f, auto&& pointwise) {
  double acc = 0.0;
  for (int k = 0; k < f.samples(); ++k) acc += pointwise(k) * f.node(k) * f.node(k);
  return 4.0 * std::numbers::pi * f.spacing() * acc;
}

std::size_t index_of(const RadialTrajectory& traj, double t) {
  if (traj.times.size() < 2) throw std::invalid_argument("radial trajectory needs at least two snapshots");
  const double spacing = traj.times[1] - traj.times[0];
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    if (std::abs(traj.times[i] - t) <= 1e-9 * spacing) return i;
  throw std::invalid_argument("time " + std::to_string(t) + " is not a snapshot time");
}

std::vector<double> cumulative(const RadialTrajectory& traj, const std::vector<SnapshotTerms>& terms,
                               double SnapshotTerms::*field) {
  std::vector<double> out(terms.size(), 0.0);
  for (std::size_t i = 1; i < terms.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (traj.times[i] - traj.times[i - 1]) * (terms[i].*field + terms[i - 1].*field);
  return out;
}

struct Window {
  std::size_t i1, i2;
  std::vector<SnapshotTerms> terms;  // indices 0..i2
};

Window measure_window(const RadialTrajectory& traj, double p, double t1, double t2) {
  if (!(t1 < t2)) throw std::invalid_argument("identity window needs t1 < t2");
  Window w{index_of(traj, t1), index_of(traj, t2), {}};
  w.terms.resize(w.i2 + 1);
  for (std::size_t i = w.i1; i <= w.i2; ++i) w.terms[i] = measure_radial_snapshot(traj.profiles[i], p, 1.0);
  return w;
}

double between(const std::vector<double>& cum, std::size_t i1, std::size_t i2) { return cum[i2] - cum[i1]; }

}  // namespace

SnapshotTerms measure_radial_snapshot(const RadialProfile& u, double p, double s) {
  const RadialProfile du = radial::radial_derivative(u);
  SnapshotTerms t;
  t.l2sq = shell_integral(u, [&](int k) { return std::norm(u[k]); });
  t.lpp1 = shell_integral(u, [&](int k) { return std::pow(std::abs(u[k]), p + 1.0); });
  t.linf = u.max_abs();
  t.hs = radial::radial_sobolev_norm(u, s);
  const double h2 = radial::radial_sobolev_norm(u, 2.0);
  t.h2sq = h2 * h2;
  t.h1sq = shell_integral(u, [&](int k) { return std::norm(du[k]); });
  t.gradient_dissipation = shell_integral(u, [&](int k) { return std::pow(std::abs(u[k]), p - 1.0) * std::norm(du[k]); });
  t.modulus_dissipation = shell_integral(u, [&](int k) {
    const double m = std::norm(u[k]);
    const double dm = 2.0 * (std::conj(u[k]) * du[k]).real();
    const double factor = p >= 3.0 ? std::pow(m, 0.5 * (p - 3.0)) : std::pow(m + kModulusRegularization, 0.5 * (p - 3.0));
    return factor * dm * dm;
  });
  return t;
}

IdentityResidual check_l2_identity(const RadialTrajectory& traj, double p, double t1, double t2) {
  auto w = measure_window(traj, p, t1, t2);
  const double kappa = traj.linear ? 0.0 : 1.0;
  double budget = 0.0;
  for (std::size_t i = w.i1; i < w.i2; ++i)
    budget += 0.5 * (traj.times[i + 1] - traj.times[i]) * (w.terms[i].lpp1 + w.terms[i + 1].lpp1);
  auto r = IdentityResidual::make(w.terms[w.i2].l2sq + 2.0 * kappa * budget, w.terms[w.i1].l2sq);
  if (w.i1 == 0) r.notes.push_back("window starts at t1 = 0, the initial time");
  return r;
}

IdentityResidual check_h1_identity(const RadialTrajectory& traj, double p, double t1, double t2) {
  auto w = measure_window(traj, p, t1, t2);
  const double kappa = traj.linear ? 0.0 : 1.0;
  double grad = 0.0, mod = 0.0;
  for (std::size_t i = w.i1; i < w.i2; ++i) {
    const double h = 0.5 * (traj.times[i + 1] - traj.times[i]);
    grad += h * (w.terms[i].gradient_dissipation + w.terms[i + 1].gradient_dissipation);
    mod += h * (w.terms[i].modulus_dissipation + w.terms[i + 1].modulus_dissipation);
  }
  auto r = IdentityResidual::make(w.terms[w.i2].h1sq + 2.0 * kappa * grad + kappa * 0.5 * (p - 1.0) * mod,
                                  w.terms[w.i1].h1sq);
  if (w.i1 == 0) r.notes.push_back("window starts at t1 = 0, the initial time");
  if (p < 3.0) r.notes.push_back("|u|^(p-3) regularised with |u|^2 + 1e-30");
  return r;
}

std::vector<DiagnosticsRow> diagnostics_table(const RadialTrajectory& traj, double p, double s) {
  if (traj.profiles.empty()) return {};
  const double kappa = traj.linear ? 0.0 : 1.0;
  std::vector<SnapshotTerms> terms;
  terms.reserve(traj.profiles.size());
  for (const auto& u : traj.profiles) terms.push_back(measure_radial_snapshot(u, p, s));
  const auto lpp1 = cumulative(traj, terms, &SnapshotTerms::lpp1);
  const auto grad = cumulative(traj, terms, &SnapshotTerms::gradient_dissipation);
  const auto mod = cumulative(traj, terms, &SnapshotTerms::modulus_dissipation);

  std::vector<DiagnosticsRow> rows(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    auto& row = rows[i];
    row.record = {traj.times[i], std::sqrt(t.l2sq), std::sqrt(t.h1sq), std::sqrt(t.h2sq), t.hs, t.linf, t.lpp1};
    row.lpp1_budget = 2.0 * kappa * between(lpp1, 0, i);
    row.res_l2 = IdentityResidual::make(t.l2sq + row.lpp1_budget, terms[0].l2sq).relative;
    row.res_h1 =
        IdentityResidual::make(t.h1sq + 2.0 * kappa * grad[i] + kappa * 0.5 * (p - 1.0) * mod[i], terms[0].h1sq).relative;
  }
  return rows;
}

}  // namespace semirelax::diagnostics
