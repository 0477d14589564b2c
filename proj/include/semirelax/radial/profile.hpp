#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace semirelax::radial {

using cplx = std::complex<double>;

/// A radial function on R^3 sampled at staggered nodes r_k = (k + 1/2) R / M,
/// k = 0..M-1. The staggering keeps every node away from r = 0.
class RadialProfile {
 public:
  /// Zero profile. Throws std::invalid_argument unless M >= 16 and R > 0.
  RadialProfile(double extent, int samples);
  RadialProfile(double extent, std::vector<cplx> values);

  static RadialProfile sample(double extent, int samples, const std::function<cplx(double)>& f);

  double extent() const noexcept { return extent_; }
  int samples() const noexcept { return static_cast<int>(values_.size()); }
  double spacing() const noexcept { return extent_ / samples(); }
  double node(int k) const noexcept { return (k + 0.5) * spacing(); }

  std::span<cplx> values() noexcept { return values_; }
  std::span<const cplx> values() const noexcept { return values_; }
  cplx& operator[](std::size_t k) { return values_[k]; }
  const cplx& operator[](std::size_t k) const { return values_[k]; }

  bool same_grid(const RadialProfile& other) const noexcept {
    return extent_ == other.extent_ && values_.size() == other.values_.size();
  }
  bool all_finite() const noexcept;
  double max_abs() const noexcept;

 private:
  double extent_;
  std::vector<cplx> values_;
};

/// Time-ordered radial profiles on one shared radial grid.
struct RadialTrajectory {
  std::vector<double> times;
  std::vector<RadialProfile> profiles;
  double dt = 0.0;
  /// True when produced by the free propagator only.
  bool linear = false;
};

/// Midpoint-rule L^2(R^3) norm: (sum |f|^2 4 pi r_k^2 h)^{1/2}.
double radial_l2_norm(const RadialProfile& f);

/// f'(r_k) by fourth-order differences. The profile is extended evenly
/// across r = 0; one-sided stencils are used at the outer edge.
RadialProfile radial_derivative(const RadialProfile& f);

}  // namespace semirelax::radial
