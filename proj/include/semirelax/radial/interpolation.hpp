#pragma once

#include <array>
#include <vector>

#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

/// Piecewise-cubic Lagrange interpolant of a profile. Between consecutive
/// breakpoints (0, r_0, ..., r_{M-1}, R) it is the cubic through four
/// neighbouring nodes, with the stencil shifted inward near either end. It
/// vanishes for r > R and reproduces cubic polynomials exactly on [0, R].
class CubicInterpolant {
 public:
  explicit CubicInterpolant(const RadialProfile& f);

  cplx operator()(double r) const;
  /// G(lambda) = int_0^{min(lambda, R)} s f(s) ds, exact for the interpolant.
  cplx moment_integral(double lambda) const {
    if (lambda <= 0.0) return 0.0;
    if (lambda >= extent_) return prefix_.back();
    const int i = interval_of(lambda);
    return prefix_[i] + moment_from_left(i, lambda - breakpoint(i));
  }

  const RadialProfile& profile() const noexcept { return f_; }

 private:
  int interval_of(double r) const noexcept {
    if (r < first_node_) return 0;
    const int i = static_cast<int>(r * inv_spacing_ - 0.5) + 1;
    return i < 1 ? 1 : (i > samples_ ? samples_ : i);
  }
  double breakpoint(int interval) const noexcept {
    if (interval <= 0) return 0.0;
    if (interval > samples_) return extent_;
    return (interval - 0.5) * spacing_;
  }
  cplx eval_in(int interval, double r) const;
  // int_{a}^{a + delta} s p(s) ds for the cubic of `interval`, a its left end.
  cplx moment_from_left(int interval, double delta) const {
    const auto& c = coeffs_[interval];
    const double a = breakpoint(interval);
    const double d = delta, d2 = d * d, d3 = d2 * d, d4 = d3 * d;
    const cplx plain = c[0] * d + c[1] * (d2 / 2) + c[2] * (d3 / 3) + c[3] * (d4 / 4);
    const cplx weighted = c[0] * (d2 / 2) + c[1] * (d3 / 3) + c[2] * (d4 / 4) + c[3] * (d4 * d / 5);
    return a * plain + weighted;
  }

  RadialProfile f_;
  int samples_;
  double extent_, spacing_, inv_spacing_, first_node_;
  // Monomial coefficients of each interval's cubic in (r - left end).
  std::vector<std::array<cplx, 4>> coeffs_;
  // Prefix sums of moment_integral at the left end of each interval.
  std::vector<cplx> prefix_;
};

}  // namespace semirelax::radial
