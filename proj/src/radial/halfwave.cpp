#include "semirelax/radial/halfwave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "semirelax/spectral/fft.hpp"

namespace semirelax::radial {

RadialProfile radial_multiplier(const RadialProfile& f, const std::function<cplx(double k)>& m) {
  const int M = f.samples();
  const double R = f.extent();
  std::vector<double> re(M), im(M);
  for (int j = 0; j < M; ++j) {
    const cplx v = f.node(j) * f[j];
    re[j] = v.real();
    im[j] = v.imag();
  }
  spectral::dst_forward(re);
  spectral::dst_forward(im);
  for (int q = 0; q < M; ++q) {
    const cplx c = m((q + 1) * std::numbers::pi / R) * cplx(re[q], im[q]);
    re[q] = c.real();
    im[q] = c.imag();
  }
  spectral::dst_backward(re);
  spectral::dst_backward(im);
  RadialProfile out(R, M);
  const double norm = 1.0 / (2.0 * M);
  for (int j = 0; j < M; ++j) out[j] = norm * cplx(re[j], im[j]) / f.node(j);
  return out;
}

RadialProfile radial_halfwave_operator(const RadialProfile& f) {
  const double peak = f.max_abs();
  if (peak > 0.0 && !(std::abs(f[f.samples() - 1]) < 1e-8 * peak))
    throw std::domain_error("radial profile has not decayed at the outer radius (|f(R)| >= 1e-8 max|f|)");
  return radial_multiplier(f, [](double k) { return cplx(k); });
}

RadialProfile radial_fractional_power(const RadialProfile& f, double s) {
  return radial_multiplier(f, [s](double k) { return cplx(std::pow(k, s)); });
}

RadialProfile radial_linear_step(const RadialProfile& f, double tau) {
  return radial_multiplier(f, [tau](double k) { return std::polar(1.0, -tau * k); });
}

double radial_sobolev_norm(const RadialProfile& f, double s) {
  return radial_l2_norm(s == 0.0 ? f : radial_fractional_power(f, s));
}

cplx radial_inner_product(const RadialProfile& f, const RadialProfile& g) {
  if (!f.same_grid(g)) throw std::invalid_argument("profiles live on different radial grids");
  cplx acc = 0.0;
  for (int k = 0; k < f.samples(); ++k) acc += f[k] * std::conj(g[k]) * f.node(k) * f.node(k);
  return 4.0 * std::numbers::pi * f.spacing() * acc;
}

}  // namespace semirelax::radial
