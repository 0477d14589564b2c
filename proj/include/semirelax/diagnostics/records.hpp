#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace semirelax::diagnostics {

/// Norms of one snapshot. lpp1 is ||u||_{L^{p+1}}^{p+1}.
struct DiagnosticsRecord {
  double time = 0.0;
  double l2 = 0.0;
  double h1dot = 0.0;
  double h2dot = 0.0;
  double hs = 0.0;
  double linf = 0.0;
  double lpp1 = 0.0;
};

/// lhs versus rhs of an identity. relative = residual / max(lhs, rhs, 1e-300).
struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double relative = 0.0;
  /// Remarks attached by the checker (e.g. an extended time window).
  std::vector<std::string> notes;

  static IdentityResidual make(double lhs, double rhs);
};

/// lhs <= rhs style estimate with an empirically fitted constant.
/// A non-finite empirical constant is written as JSON null.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double relative = 0.0;
  double empirical_constant = 0.0;
  bool holds = true;
  /// Largest ratio (lhs - first rhs term) / integral over all windows, before
  /// clipping at zero; negative when the norm only decays. NaN if not computed.
  double signed_constant = NAN;
  std::vector<std::string> notes;

  static BoundReport make(double lhs, double rhs, double empirical_constant);
  std::string to_json() const;
};

std::string to_json(const IdentityResidual& r);

}  // namespace semirelax::diagnostics
