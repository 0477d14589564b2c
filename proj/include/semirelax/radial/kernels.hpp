#pragma once

#include "semirelax/radial/interpolation.hpp"

namespace semirelax::radial {

/// J[f](t, r) = (1/2r) int_{|r-t|}^{r+t} s f(s) ds, with f replaced by its
/// cubic interpolant and taken as zero beyond R. Throws std::invalid_argument
/// on r <= 0 or t < 0.
cplx J_kernel(const CubicInterpolant& f, double t, double r);
cplx J_kernel(const RadialProfile& f, double t, double r);

/// d/dt J[f](t, r) = [(r+t) f(r+t) + (r-t) f(|r-t|)] / (2r).
cplx dJ_dt(const CubicInterpolant& f, double t, double r);
cplx dJ_dt(const RadialProfile& f, double t, double r);

/// J[f](t, .) and d/dt J[f](t, .) at every node of f's grid.
RadialProfile J_on_nodes(const CubicInterpolant& f, double t);
RadialProfile dJ_dt_on_nodes(const CubicInterpolant& f, double t);

}  // namespace semirelax::radial
