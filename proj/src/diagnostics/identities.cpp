#include "semirelax/diagnostics/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "semirelax/errors.hpp"
#include "semirelax/spectral/multiplier.hpp"
#include "semirelax/spectral/norms.hpp"

namespace semirelax::diagnostics {

using spectral::cplx;
using spectral::Representation;

namespace {

double integral_of(const Field& f, auto&& pointwise) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += pointwise(i);
  return acc * f.grid().cell_volume();
}

// Trapezoid weights of snapshots i1..i2 (inclusive) folded into a sum.
double trapezoid(const Trajectory& traj, std::size_t i1, std::size_t i2, const std::vector<double>& values) {
  double acc = 0.0;
  for (std::size_t i = i1; i < i2; ++i) acc += 0.5 * (traj.times[i + 1] - traj.times[i]) * (values[i] + values[i + 1]);
  return acc;
}

std::vector<double> cumulative(const Trajectory& traj, const std::vector<double>& values) {
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 1; i < values.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (traj.times[i] - traj.times[i - 1]) * (values[i] + values[i - 1]);
  return out;
}

std::pair<std::size_t, std::size_t> window(const Trajectory& traj, double t1, double t2) {
  if (traj.empty()) throw std::invalid_argument("empty trajectory");
  if (!(t1 < t2)) throw std::invalid_argument("identity window needs t1 < t2");
  return {traj.index_of(t1), traj.index_of(t2)};
}

std::vector<SnapshotTerms> measure_range(const Trajectory& traj, std::size_t i1, std::size_t i2, double s) {
  std::vector<SnapshotTerms> out(traj.size());
  for (std::size_t i = i1; i <= i2; ++i) out[i] = measure_snapshot(traj.snapshots[i], traj.config.p, s);
  return out;
}

template <class F>
std::vector<double> column(const std::vector<SnapshotTerms>& terms, F f) {
  std::vector<double> v(terms.size());
  std::transform(terms.begin(), terms.end(), v.begin(), f);
  return v;
}

}  // namespace

SnapshotTerms measure_snapshot(const Field& field, double p, double s) {
  const Field u = field.to_physical();
  const int n = u.grid().dim();
  SnapshotTerms t;
  t.l2sq = integral_of(u, [&](std::size_t i) { return std::norm(u[i]); });
  t.lpp1 = integral_of(u, [&](std::size_t i) { return std::pow(std::abs(u[i]), p + 1.0); });
  t.linf = spectral::lp_norm(u, INFINITY);
  t.hs = spectral::sobolev_norm(u, {s, true});

  Field modsq(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) modsq[i] = std::norm(u[i]);

  std::vector<double> grad_sq(u.size(), 0.0), grad_mod_sq(u.size(), 0.0), hess_sq(u.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const Field du = spectral::partial_derivative(u, j);
    const Field dm = spectral::partial_derivative(modsq, j);
    for (std::size_t i = 0; i < u.size(); ++i) {
      grad_sq[i] += std::norm(du[i]);
      grad_mod_sq[i] += std::norm(dm[i].real());
    }
    for (int k = 0; k < n; ++k) {
      const Field d2 = spectral::second_derivative(u, j, k);
      for (std::size_t i = 0; i < u.size(); ++i) hess_sq[i] += std::norm(d2[i]);
    }
  }
  t.h1sq = integral_of(u, [&](std::size_t i) { return grad_sq[i]; });
  t.h2sq = integral_of(u, [&](std::size_t i) { return hess_sq[i]; });
  t.gradient_dissipation =
      integral_of(u, [&](std::size_t i) { return std::pow(std::abs(u[i]), p - 1.0) * grad_sq[i]; });
  t.modulus_dissipation = integral_of(u, [&](std::size_t i) {
    const double m = std::norm(u[i]);
    const double factor = p >= 3.0 ? std::pow(m, 0.5 * (p - 3.0)) : std::pow(m + kModulusRegularization, 0.5 * (p - 3.0));
    return factor * grad_mod_sq[i];
  });
  t.hessian_dissipation = integral_of(u, [&](std::size_t i) { return std::norm(u[i]) * hess_sq[i]; });
  return t;
}

IdentityResidual check_l2_identity(const Trajectory& traj, double t1, double t2) {
  const auto [i1, i2] = window(traj, t1, t2);
  const double kappa = traj.config.nonlinear_coefficient;
  const double p = traj.config.p;
  std::vector<double> lpp1(traj.size(), 0.0);
  for (std::size_t i = i1; i <= i2; ++i)
    lpp1[i] = std::pow(spectral::lp_norm(traj.snapshots[i], p + 1.0), p + 1.0);
  const double a = spectral::lp_norm(traj.snapshots[i2], 2.0), b = spectral::lp_norm(traj.snapshots[i1], 2.0);
  auto r = IdentityResidual::make(a * a + 2.0 * kappa * trapezoid(traj, i1, i2, lpp1), b * b);
  if (i1 == 0) r.notes.push_back("window starts at t1 = 0, the initial time");
  return r;
}

IdentityResidual check_h1_identity(const Trajectory& traj, double t1, double t2) {
  const auto [i1, i2] = window(traj, t1, t2);
  const double kappa = traj.config.nonlinear_coefficient;
  const double p = traj.config.p;
  const auto terms = measure_range(traj, i1, i2, 1.0);
  const double grad = trapezoid(traj, i1, i2, column(terms, [](const auto& t) { return t.gradient_dissipation; }));
  const double mod = trapezoid(traj, i1, i2, column(terms, [](const auto& t) { return t.modulus_dissipation; }));
  auto r = IdentityResidual::make(terms[i2].h1sq + 2.0 * kappa * grad + kappa * 0.5 * (p - 1.0) * mod, terms[i1].h1sq);
  if (i1 == 0) r.notes.push_back("window starts at t1 = 0, the initial time");
  if (p < 3.0) r.notes.push_back("|u|^(p-3) regularised with |u|^2 + 1e-30");
  return r;
}

bool gradient_norm_nonincreasing(const Trajectory& traj, double rel_tol) {
  double prev = INFINITY;
  for (const auto& u : traj.snapshots) {
    double h1 = spectral::sobolev_norm(u, {1.0, true});
    if (h1 > prev * (1.0 + rel_tol)) return false;
    prev = h1;
  }
  return true;
}

BoundReport check_hs_growth(const Trajectory& traj, double s, double C) {
  if (traj.empty()) throw std::invalid_argument("empty trajectory");
  const int n = traj.grid().dim();
  const double p = traj.config.p;
  if (n > 2) throw HypothesisError("the H^s growth bound is stated for dimensions 1 and 2");
  if (!(s > 0.5 * n && s < std::min(2.0, p)))
    throw HypothesisError("the H^s growth bound needs n/2 < s < min(2, p); got s = " + std::to_string(s));
  if (!(C >= 0.0)) throw std::invalid_argument("constant C must be nonnegative");

  std::vector<double> hsq(traj.size()), weight(traj.size());
  double hmax = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double h = spectral::sobolev_norm(traj.snapshots[i], {s, true});
    const double linf = spectral::lp_norm(traj.snapshots[i], INFINITY);
    hsq[i] = h * h;
    weight[i] = std::pow(linf, p - 1.0) * hsq[i];
    hmax = std::max(hmax, hsq[i]);
  }
  const auto integral = cumulative(traj, weight);
  // Growth below this is rounding noise (e.g. the exact isometry of the free flow).
  const double noise = 1e-12 * hmax;
  double cstar = 0.0, sharpest = -INFINITY;
  for (std::size_t i = 0; i < traj.size(); ++i)
    for (std::size_t j = i + 1; j < traj.size(); ++j) {
      const double growth = hsq[j] - hsq[i];
      const double denom = integral[j] - integral[i];
      if (denom > 0.0) sharpest = std::max(sharpest, growth / denom);
      if (growth <= noise) continue;
      cstar = std::max(cstar, denom > 0.0 ? growth / denom : INFINITY);
    }
  auto b = BoundReport::make(hsq.back(), hsq.front() + C * integral.back(), cstar);
  b.holds = C >= cstar;
  b.signed_constant = sharpest;
  return b;
}

BoundReport check_h2_inequality(const Trajectory& traj, double t1, double t2) {
  const auto [i1, i2] = window(traj, t1, t2);
  if (traj.config.p != 3.0) throw HypothesisError("the H^2 inequality is stated for the cubic power p = 3");
  const int n = traj.grid().dim();
  const double kappa = traj.config.nonlinear_coefficient;
  const auto terms = measure_range(traj, i1, i2, 2.0);
  const double hess = trapezoid(traj, i1, i2, column(terms, [](const auto& t) { return t.hessian_dissipation; }));
  const double inter = trapezoid(traj, i1, i2, column(terms, [n](const auto& t) {
    return std::pow(t.h1sq, 0.5 * (4 - n)) * std::pow(t.h2sq, 0.5 * n);
  }));
  const double factor = 2.0 * n * n * (n + 1);
  const double growth = terms[i2].h2sq + 2.0 * kappa * hess - terms[i1].h2sq;
  double cstar = 0.0;
  if (kappa * inter > 0.0) cstar = std::max(0.0, growth / (kappa * inter));
  auto b = BoundReport::make(terms[i2].h2sq + 2.0 * kappa * hess, terms[i1].h2sq + factor * kappa * inter, cstar);
  // The free flow is an exact isometry: allow rounding at the level of the norms.
  b.holds = b.lhs <= b.rhs + 1e-12 * std::max(terms[i1].h2sq, terms[i2].h2sq);
  if (i1 == 0) b.notes.push_back("window starts at t1 = 0, the initial time");
  return b;
}

Field rescale(const Field& u0, double sigma, double p) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("scale sigma must be positive");
  if (!(p > 1.0)) throw std::invalid_argument("power p must exceed 1");
  const Field phys = u0.to_physical();
  const auto& g = phys.grid();
  Field out(spectral::make_grid(g.dim(), g.points(), g.length() / sigma));
  const double amp = std::pow(sigma, 1.0 / (p - 1.0));
  for (std::size_t i = 0; i < phys.size(); ++i) out[i] = amp * phys[i];
  return out;
}

IdentityResidual check_scaling_law(const Field& u0, double sigma, double s, double p) {
  const Field scaled = rescale(u0, sigma, p);
  const int n = u0.grid().dim();
  const double expo = 1.0 / (p - 1.0) + s - 0.5 * n;
  return IdentityResidual::make(spectral::sobolev_norm(scaled, {s, true}),
                                std::pow(sigma, expo) * spectral::sobolev_norm(u0, {s, true}));
}

std::vector<DiagnosticsRow> diagnostics_table(const Trajectory& traj, double s) {
  if (traj.empty()) return {};
  const double kappa = traj.config.nonlinear_coefficient;
  const double p = traj.config.p;
  const auto terms = measure_range(traj, 0, traj.size() - 1, s);
  const auto lpp1 = cumulative(traj, column(terms, [](const auto& t) { return t.lpp1; }));
  const auto grad = cumulative(traj, column(terms, [](const auto& t) { return t.gradient_dissipation; }));
  const auto mod = cumulative(traj, column(terms, [](const auto& t) { return t.modulus_dissipation; }));

  std::vector<DiagnosticsRow> rows(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& t = terms[i];
    auto& row = rows[i];
    row.record = {traj.times[i], std::sqrt(t.l2sq), std::sqrt(t.h1sq), std::sqrt(t.h2sq), t.hs, t.linf, t.lpp1};
    row.lpp1_budget = 2.0 * kappa * lpp1[i];
    row.res_l2 = IdentityResidual::make(t.l2sq + row.lpp1_budget, terms[0].l2sq).relative;
    row.res_h1 =
        IdentityResidual::make(t.h1sq + 2.0 * kappa * grad[i] + kappa * 0.5 * (p - 1.0) * mod[i], terms[0].h1sq)
            .relative;
  }
  return rows;
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows) {
  out << kDiagnosticsHeader << '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.record.time,
                  r.record.l2, r.record.h1dot, r.record.h2dot, r.record.hs, r.record.linf, r.lpp1_budget, r.res_l2,
                  r.res_h1);
    out << buf;
  }
}

}  // namespace semirelax::diagnostics
