#include "semirelax/radial/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace semirelax::radial {

namespace {
void validate(double extent, std::size_t samples) {
  if (!(extent > 0.0) || !std::isfinite(extent)) throw std::invalid_argument("radial extent must be positive");
  if (samples < 16) throw std::invalid_argument("radial profile needs at least 16 samples");
}
}  // namespace

RadialProfile::RadialProfile(double extent, int samples) : extent_(extent) {
  validate(extent, samples < 0 ? 0 : static_cast<std::size_t>(samples));
  values_.assign(samples, cplx(0.0));
}

RadialProfile::RadialProfile(double extent, std::vector<cplx> values) : extent_(extent), values_(std::move(values)) {
  validate(extent, values_.size());
}

RadialProfile RadialProfile::sample(double extent, int samples, const std::function<cplx(double)>& f) {
  RadialProfile out(extent, samples);
  for (int k = 0; k < samples; ++k) out.values_[k] = f(out.node(k));
  return out;
}

bool RadialProfile::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

double RadialProfile::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double radial_l2_norm(const RadialProfile& f) {
  double acc = 0.0;
  for (int k = 0; k < f.samples(); ++k) {
    const double r = f.node(k);
    acc += std::norm(f[k]) * r * r;
  }
  return std::sqrt(4.0 * std::numbers::pi * acc * f.spacing());
}

RadialProfile radial_derivative(const RadialProfile& f) {
  const int M = f.samples();
  const double h = f.spacing();
  auto at = [&](int k) { return k < 0 ? f[-k - 1] : f[k]; };
  RadialProfile d(f.extent(), M);
  for (int k = 0; k < M; ++k) {
    if (k + 2 < M)
      d[k] = (at(k - 2) - 8.0 * at(k - 1) + 8.0 * at(k + 1) - at(k + 2)) / (12.0 * h);
    else if (k + 1 < M)
      d[k] = (3.0 * at(k + 1) + 10.0 * at(k) - 18.0 * at(k - 1) + 6.0 * at(k - 2) - at(k - 3)) / (12.0 * h);
    else
      d[k] = (25.0 * at(k) - 48.0 * at(k - 1) + 36.0 * at(k - 2) - 16.0 * at(k - 3) + 3.0 * at(k - 4)) / (12.0 * h);
  }
  return d;
}

}  // namespace semirelax::radial
