#pragma once

#include <functional>

#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

/// Applies the radial Fourier multiplier m(|xi|) to a radial function on R^3.
/// Works on v = r f: v is expanded in the sine modes sin(k r),
/// k = (m+1) pi / R (DST-II on the staggered nodes), each mode is scaled by
/// m(k), and the result is divided by r again. No decay check.
RadialProfile radial_multiplier(const RadialProfile& f, const std::function<cplx(double k)>& m);

/// D = (-Delta)^{1/2} on radial data. Throws std::domain_error unless the
/// profile has decayed at the outer edge: |f_{M-1}| < 1e-8 max |f|.
RadialProfile radial_halfwave_operator(const RadialProfile& f);

/// D^s without the decay check, for diagnostics on evolved data.
RadialProfile radial_fractional_power(const RadialProfile& f, double s);

/// Free propagator e^{-i tau D} on radial data.
RadialProfile radial_linear_step(const RadialProfile& f, double tau);

/// ||D^s f||_{L^2(R^3)} by the midpoint rule.
double radial_sobolev_norm(const RadialProfile& f, double s);

/// int f conj(g) 4 pi r^2 dr by the midpoint rule.
cplx radial_inner_product(const RadialProfile& f, const RadialProfile& g);

}  // namespace semirelax::radial
