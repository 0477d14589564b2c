#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semirelax/diagnostics/records.hpp"
#include "semirelax/propagator/trajectory.hpp"

namespace semirelax::diagnostics {

using propagator::Trajectory;
using spectral::Field;

/// Added to |u|^2 before raising it to the power (p-3)/2 when p < 3.
inline constexpr double kModulusRegularization = 1e-30;

/// Spatial quantities of one snapshot entering the energy identities.
/// Derivatives are spectral (i xi_j and -xi_j xi_k).
struct SnapshotTerms {
  double l2sq = 0.0;              // ||u||^2
  double lpp1 = 0.0;              // ||u||_{p+1}^{p+1}
  double h1sq = 0.0;              // ||grad u||^2
  double gradient_dissipation = 0.0;  // || |u|^{(p-1)/2} grad u ||^2
  double modulus_dissipation = 0.0;   // || |u|^{(p-3)/2} grad |u|^2 ||^2
  double h2sq = 0.0;              // ||u||_{H^2-dot}^2
  double hessian_dissipation = 0.0;   // sum_{j,k} || u d_j d_k u ||^2
  double hs = 0.0;                // ||u||_{H^s-dot}
  double linf = 0.0;
};

SnapshotTerms measure_snapshot(const Field& u, double p, double s);

/// ||u(t2)||^2 + 2 kappa int_{t1}^{t2} ||u||_{p+1}^{p+1}  versus  ||u(t1)||^2.
/// t1 = 0 is accepted and noted. Throws std::invalid_argument if t1, t2 are
/// not snapshot times or t1 >= t2.
IdentityResidual check_l2_identity(const Trajectory& traj, double t1, double t2);

/// ||grad u(t2)||^2 + 2 kappa int || |u|^{(p-1)/2} grad u ||^2
///   + kappa (p-1)/2 int || |u|^{(p-3)/2} grad |u|^2 ||^2  versus  ||grad u(t1)||^2.
IdentityResidual check_h1_identity(const Trajectory& traj, double t1, double t2);

/// True when ||grad u|| never increases by more than rel_tol between snapshots.
bool gradient_norm_nonincreasing(const Trajectory& traj, double rel_tol = 1e-8);

/// Gronwall-type bound ||u(t2)||^2_{H^s-dot} <= ||u(t1)||^2 + C int ||u||_inf^{p-1} ||u||^2_{H^s-dot}.
/// Reports lhs/rhs over the whole run for the supplied C, and the smallest
/// C* >= 0 for which the bound holds over every snapshot pair.
/// Throws HypothesisError unless n in {1, 2} and n/2 < s < min(2, p).
BoundReport check_hs_growth(const Trajectory& traj, double s, double C);

/// ||u(t2)||^2_{H^2-dot} + 2 kappa sum_{j,k} int ||u d_j d_k u||^2
///   <= ||u(t1)||^2_{H^2-dot} + 2 n^2 (n+1) kappa int ||u||_{H^1-dot}^{4-n} ||u||_{H^2-dot}^n.
/// The empirical constant is the smallest factor that could replace 2n^2(n+1).
/// Throws HypothesisError unless p = 3.
BoundReport check_h2_inequality(const Trajectory& traj, double t1, double t2);

/// u_{0,sigma}(x) = sigma^{1/(p-1)} u_0(sigma x) on the grid of period L / sigma.
Field rescale(const Field& u0, double sigma, double p);

/// ||u_{0,sigma}||_{H^s-dot} versus sigma^{1/(p-1)+s-n/2} ||u_0||_{H^s-dot}.
IdentityResidual check_scaling_law(const Field& u0, double sigma, double s, double p);

/// One CSV row per snapshot. lpp1_budget is 2 kappa int_0^t ||u||_{p+1}^{p+1};
/// res_prop21 / res_prop22 are the relative residuals of the L^2 and H^1
/// identities over [0, t].
struct DiagnosticsRow {
  DiagnosticsRecord record;
  double lpp1_budget = 0.0;
  double res_l2 = 0.0;
  double res_h1 = 0.0;
};

std::vector<DiagnosticsRow> diagnostics_table(const Trajectory& traj, double s);

inline constexpr const char* kDiagnosticsHeader = "t,l2,h1dot,h2dot,hs,linf,lpp1_budget,res_prop21,res_prop22";

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows);

}  // namespace semirelax::diagnostics
