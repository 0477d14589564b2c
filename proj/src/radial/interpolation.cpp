#include "semirelax/radial/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace semirelax::radial {

CubicInterpolant::CubicInterpolant(const RadialProfile& f)
    : f_(f),
      samples_(f.samples()),
      extent_(f.extent()),
      spacing_(f.spacing()),
      inv_spacing_(1.0 / f.spacing()),
      first_node_(f.node(0)) {
  const int M = samples_;
  coeffs_.resize(M + 1);
  for (int i = 0; i <= M; ++i) {
    const int start = std::clamp(i - 2, 0, M - 4);
    const double a = breakpoint(i);
    std::array<double, 4> y;
    for (int q = 0; q < 4; ++q) y[q] = f_.node(start + q) - a;
    auto& c = coeffs_[i];
    c.fill(cplx(0.0));
    for (int q = 0; q < 4; ++q) {
      // Expand prod_{m != q} (d - y_m) / (y_q - y_m) in powers of d.
      double denom = 1.0;
      std::array<double, 3> roots;
      int k = 0;
      for (int m = 0; m < 4; ++m)
        if (m != q) {
          denom *= y[q] - y[m];
          roots[k++] = y[m];
        }
      const double e1 = roots[0] + roots[1] + roots[2];
      const double e2 = roots[0] * roots[1] + roots[1] * roots[2] + roots[0] * roots[2];
      const double e3 = roots[0] * roots[1] * roots[2];
      const cplx v = f_[start + q] / denom;
      c[0] -= e3 * v;
      c[1] += e2 * v;
      c[2] -= e1 * v;
      c[3] += v;
    }
  }
  prefix_.assign(M + 2, cplx(0.0));
  for (int i = 0; i <= M; ++i) prefix_[i + 1] = prefix_[i] + moment_from_left(i, breakpoint(i + 1) - breakpoint(i));
}

cplx CubicInterpolant::eval_in(int interval, double r) const {
  const auto& c = coeffs_[interval];
  const double d = r - breakpoint(interval);
  return c[0] + d * (c[1] + d * (c[2] + d * c[3]));
}

cplx CubicInterpolant::operator()(double r) const {
  if (r < 0.0 || r > f_.extent()) return 0.0;
  return eval_in(interval_of(r), r);
}

}  // namespace semirelax::radial
