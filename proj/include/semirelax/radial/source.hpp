#pragma once

#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

/// F_p(u) = -d/dt(|u|^{p-1} u) + i D(|u|^{p-1} u) along solutions of
/// u_t = -i D u - |u|^{p-1} u, so that u_tt = -D^2 u + F_p(u).
///
/// Evaluated by the chain rule
///   d/dt N = (p+1)/2 |u|^{p-1} u_t + (p-1)/2 |u|^{p-3} u^2 conj(u_t),
/// with u_t replaced by the equation. For p < 3 the factor |u|^{p-3} uses
/// |u|^2 + 1e-30. D is the radial multiplier |xi| without decay check.
RadialProfile nonlinear_source(const RadialProfile& u, double p);

/// The same quantity from the fully expanded form
///   i D(N) + i (p+1)/2 |u|^{p-1} Du - i (p-1)/2 |u|^{p-3} u^2 conj(Du) + p |u|^{2p-2} u.
RadialProfile nonlinear_source_expanded(const RadialProfile& u, double p);

/// Pointwise expanded form given u, Du and D(|u|^{p-1} u) at one point.
cplx nonlinear_source_at(cplx u, cplx Du, cplx DN, double p);

}  // namespace semirelax::radial
