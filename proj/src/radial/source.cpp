#include "semirelax/radial/source.hpp"

#include <cmath>
#include <stdexcept>

#include "semirelax/radial/halfwave.hpp"

namespace semirelax::radial {

namespace {

constexpr double kRegularization = 1e-30;

double modulus_power(cplx u, double e) {
  const double m = std::norm(u);
  return std::pow(e < 0.0 ? m + kRegularization : m, 0.5 * e);
}

RadialProfile nonlinearity(const RadialProfile& u, double p) {
  RadialProfile n = u;
  for (auto& v : n.values()) v *= modulus_power(v, p - 1.0);
  return n;
}

void check_power(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("power p must exceed 1");
}

const cplx I(0.0, 1.0);

}  // namespace

RadialProfile nonlinear_source(const RadialProfile& u, double p) {
  check_power(p);
  const RadialProfile N = nonlinearity(u, p);
  const RadialProfile Du = radial_fractional_power(u, 1.0);
  const RadialProfile DN = radial_fractional_power(N, 1.0);
  RadialProfile F(u.extent(), u.samples());
  for (int k = 0; k < u.samples(); ++k) {
    const cplx ut = -I * Du[k] - N[k];
    const cplx dN = 0.5 * (p + 1.0) * modulus_power(u[k], p - 1.0) * ut +
                    0.5 * (p - 1.0) * modulus_power(u[k], p - 3.0) * u[k] * u[k] * std::conj(ut);
    F[k] = -dN + I * DN[k];
  }
  return F;
}

cplx nonlinear_source_at(cplx u, cplx Du, cplx DN, double p) {
  return I * DN + I * (0.5 * (p + 1.0)) * modulus_power(u, p - 1.0) * Du -
         I * (0.5 * (p - 1.0)) * modulus_power(u, p - 3.0) * u * u * std::conj(Du) +
         p * modulus_power(u, 2.0 * p - 2.0) * u;
}

RadialProfile nonlinear_source_expanded(const RadialProfile& u, double p) {
  check_power(p);
  const RadialProfile Du = radial_fractional_power(u, 1.0);
  const RadialProfile DN = radial_fractional_power(nonlinearity(u, p), 1.0);
  RadialProfile F(u.extent(), u.samples());
  for (int k = 0; k < u.samples(); ++k) F[k] = nonlinear_source_at(u[k], Du[k], DN[k], p);
  return F;
}

}  // namespace semirelax::radial
