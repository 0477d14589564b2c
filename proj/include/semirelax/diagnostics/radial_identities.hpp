#pragma once

#include <vector>

#include "semirelax/diagnostics/identities.hpp"
#include "semirelax/radial/profile.hpp"

namespace semirelax::diagnostics {

// Radial counterparts on R^3: midpoint rule with weight 4 pi r^2 and
// fourth-order differences for grad u = u'(r) e_r. The nonlinear coefficient
// is 1, or 0 for trajectories marked linear.

/// hs and h2sq come from the sine-series multiplier; hessian_dissipation is
/// not computed (left 0).
SnapshotTerms measure_radial_snapshot(const radial::RadialProfile& u, double p, double s);

IdentityResidual check_l2_identity(const radial::RadialTrajectory& traj, double p, double t1, double t2);
IdentityResidual check_h1_identity(const radial::RadialTrajectory& traj, double p, double t1, double t2);

std::vector<DiagnosticsRow> diagnostics_table(const radial::RadialTrajectory& traj, double p, double s);

}  // namespace semirelax::diagnostics
