#include "semirelax/radial/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace semirelax::radial {

namespace {
void check_point(double t, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("kernel radius must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("kernel time must be nonnegative");
}
}  // namespace

cplx J_kernel(const CubicInterpolant& f, double t, double r) {
  check_point(t, r);
  return (f.moment_integral(r + t) - f.moment_integral(std::abs(r - t))) / (2.0 * r);
}

cplx J_kernel(const RadialProfile& f, double t, double r) { return J_kernel(CubicInterpolant(f), t, r); }

cplx dJ_dt(const CubicInterpolant& f, double t, double r) {
  check_point(t, r);
  return ((r + t) * f(r + t) + (r - t) * f(std::abs(r - t))) / (2.0 * r);
}

cplx dJ_dt(const RadialProfile& f, double t, double r) { return dJ_dt(CubicInterpolant(f), t, r); }

RadialProfile J_on_nodes(const CubicInterpolant& f, double t) {
  RadialProfile out(f.profile().extent(), f.profile().samples());
  for (int k = 0; k < out.samples(); ++k) out[k] = J_kernel(f, t, out.node(k));
  return out;
}

RadialProfile dJ_dt_on_nodes(const CubicInterpolant& f, double t) {
  RadialProfile out(f.profile().extent(), f.profile().samples());
  for (int k = 0; k < out.samples(); ++k) out[k] = dJ_dt(f, t, out.node(k));
  return out;
}

}  // namespace semirelax::radial
