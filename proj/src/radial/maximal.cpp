#include "semirelax/radial/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "semirelax/radial/interpolation.hpp"
#include "semirelax/radial/kernels.hpp"

namespace semirelax::radial {

namespace {

// Exact integrals of the piecewise-linear interpolant on a uniform grid.
class LinearIntegral {
 public:
  LinearIntegral(std::span<const double> samples, double origin, double spacing)
      : f_(samples.begin(), samples.end()), x0_(origin), h_(spacing), prefix_(samples.size(), 0.0) {
    for (std::size_t i = 1; i < f_.size(); ++i) prefix_[i] = prefix_[i - 1] + 0.5 * h_ * (f_[i - 1] + f_[i]);
  }

  // int_{x_0}^{x} of the interpolant, x clamped to the sample range.
  double cumulative(double x) const {
    const double u = (x - x0_) / h_;
    if (u <= 0.0) return 0.0;
    const std::size_t last = f_.size() - 1;
    if (u >= static_cast<double>(last)) return prefix_[last];
    const std::size_t i = static_cast<std::size_t>(u);
    const double s = u - i;
    return prefix_[i] + h_ * s * (f_[i] + 0.5 * s * (f_[i + 1] - f_[i]));
  }

  double over(double a, double b) const { return cumulative(b) - cumulative(a); }
  // The interpolant itself (zero outside the sample range).
  double value(double x) const {
    const double u = (x - x0_) / h_;
    const std::size_t last = f_.size() - 1;
    if (u < 0.0 || u > static_cast<double>(last)) return 0.0;
    const std::size_t i = std::min(static_cast<std::size_t>(u), last == 0 ? 0 : last - 1);
    return last == 0 ? f_[0] : f_[i] + (u - i) * (f_[i + 1] - f_[i]);
  }
  double first() const { return x0_; }
  double last() const { return x0_ + h_ * (f_.size() - 1); }

 private:
  std::vector<double> f_;
  double x0_, h_;
  std::vector<double> prefix_;
};

// sup_{h>0} F(t-h, t+h) / 2h, exactly. Between consecutive radii |x_i - t|
// the integrand g(t+h) + g(t-h) is linear in h, so F is quadratic there and
// the average is stationary where h F'(h) = F(h), a quadratic in h.
double maximal_of(const LinearIntegral& F, std::size_t count, double origin, double spacing, double t) {
  std::vector<double> radii;
  radii.reserve(count + 1);
  radii.push_back(0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = std::abs(origin + i * spacing - t);
    if (r > 0.0) radii.push_back(r);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  auto average = [&](double h) { return F.over(t - h, t + h) / (2.0 * h); };
  double best = F.value(t);
  for (std::size_t j = 0; j + 1 < radii.size(); ++j) {
    const double a = radii[j], b = radii[j + 1], len = b - a;
    best = std::max(best, average(b));
    // F(a + d) = F0 + c1 d + c2 d^2 from three exact evaluations.
    const double F0 = F.over(t - a, t + a), Fm = F.over(t - a - 0.5 * len, t + a + 0.5 * len), F1 = F.over(t - b, t + b);
    const double c2 = 2.0 * (F1 - 2.0 * Fm + F0) / (len * len);
    const double c1 = (F1 - F0) / len - c2 * len;
    // (a + d)(c1 + 2 c2 d) = F0 + c1 d + c2 d^2  <=>  c2 d^2 + 2 a c2 d + (a c1 - F0) = 0.
    const double qa = c2, qb = 2.0 * a * c2, qc = a * c1 - F0;
    if (qa == 0.0) continue;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) continue;
    for (double d : {(-qb + std::sqrt(disc)) / (2.0 * qa), (-qb - std::sqrt(disc)) / (2.0 * qa)})
      if (d > 0.0 && d < len) best = std::max(best, average(a + d));
  }
  return best;
}

// |f| on the symmetric grid -r_{M-1}, ..., -r_0, r_0, ..., r_{M-1}.
std::vector<double> even_extension(const RadialProfile& f) {
  const int M = f.samples();
  std::vector<double> v(2 * M);
  for (int k = 0; k < M; ++k) v[M + k] = v[M - 1 - k] = std::abs(f[k]);
  return v;
}

}  // namespace

double maximal_function(std::span<const double> samples, double origin, double spacing, double t) {
  if (samples.empty()) throw std::invalid_argument("maximal function of an empty sample set");
  if (!(spacing > 0.0)) throw std::invalid_argument("sample spacing must be positive");
  std::vector<double> mod(samples.size());
  std::transform(samples.begin(), samples.end(), mod.begin(), [](double v) { return std::abs(v); });
  return maximal_of(LinearIntegral(mod, origin, spacing), mod.size(), origin, spacing, t);
}

double maximal_function_radial(const RadialProfile& f, double t) {
  const auto v = even_extension(f);
  const double origin = -f.node(f.samples() - 1);
  return maximal_of(LinearIntegral(v, origin, f.spacing()), v.size(), origin, f.spacing(), t);
}

double spherical_average_sup(const RadialProfile& f, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
  const auto v = even_extension(f);
  const LinearIntegral F(v, -f.node(f.samples() - 1), f.spacing());
  double best = 0.0;
  for (int k = 0; k < f.samples(); ++k) {
    const double r = f.node(k);
    best = std::max(best, F.over(std::abs(r - t), r + t) / (2.0 * r));
  }
  return best;
}

diagnostics::BoundReport maximal_bound_check(const RadialProfile& f, double T, int time_steps) {
  return duhamel_maximal_bound_check(f, nullptr, T, time_steps);
}

diagnostics::BoundReport duhamel_maximal_bound_check(const RadialProfile& f, const std::function<double(double)>& phi,
                                                     double T, int time_steps) {
  if (!(T > 0.0)) throw std::invalid_argument("time horizon must be positive");
  if (time_steps < 2) throw std::invalid_argument("need at least two time steps");
  const CubicInterpolant fi(f);
  const int M = f.samples();
  const double dt = T / time_steps;

  // J[f](t_j, r_k) for every time level; the Duhamel form convolves these in time.
  std::vector<RadialProfile> J;
  J.reserve(time_steps + 1);
  for (int j = 0; j <= time_steps; ++j) J.push_back(j == 0 ? RadialProfile(f.extent(), M) : J_on_nodes(fi, j * dt));

  std::vector<double> sup_sq(time_steps + 1, 0.0);
  for (int j = 0; j <= time_steps; ++j) {
    double best = 0.0;
    for (int k = 0; k < M; ++k) {
      cplx v;
      if (!phi) {
        v = J[j][k];
      } else {
        // int_0^{t_j} phi(t') J[f](t_j - t') dt' by the trapezoid rule.
        for (int m = 0; m <= j; ++m) v += (m == 0 || m == j ? 0.5 : 1.0) * phi(m * dt) * J[j - m][k];
        v *= dt;
      }
      best = std::max(best, std::abs(v));
    }
    sup_sq[j] = best * best;
  }
  double lhs = 0.0;
  for (int j = 0; j < time_steps; ++j) lhs += 0.5 * dt * (sup_sq[j] + sup_sq[j + 1]);
  lhs = std::sqrt(lhs);

  double rhs = radial_l2_norm(f);
  if (phi) {
    double mass = 0.0;
    for (int j = 0; j <= time_steps; ++j) mass += (j == 0 || j == time_steps ? 0.5 : 1.0) * std::abs(phi(j * dt));
    rhs *= mass * dt;
  }
  auto report = diagnostics::BoundReport::make(lhs, rhs, rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0));
  // The constant is not known a priori; the probe succeeds when it is finite.
  report.holds = std::isfinite(report.empirical_constant);
  return report;
}

}  // namespace semirelax::radial
