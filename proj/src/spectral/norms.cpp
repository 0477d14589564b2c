#include "semirelax/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "semirelax/spectral/littlewood_paley.hpp"

namespace semirelax::spectral {

namespace {

double spectral_weighted_sum(const Field& spec, const std::function<double(double)>& weight_sq) {
  const auto mags = wavenumber_magnitudes(spec.grid());
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) acc += weight_sq(mags[i]) * std::norm(spec[i]);
  return acc / std::pow(spec.grid().length(), spec.grid().dim());
}

}  // namespace

double lp_norm(const Field& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Lebesgue exponent must be >= 1");
  const Field phys = f.to_physical();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : phys.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& v : phys.values()) acc += std::norm(v);
    return std::sqrt(acc * phys.grid().cell_volume());
  }
  for (const auto& v : phys.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc * phys.grid().cell_volume(), 1.0 / p);
}

double sobolev_norm(const Field& f, SobolevSpec spec) {
  const Field s = f.to_spectral();
  const double exponent = spec.s;
  if (spec.homogeneous && exponent < 0.0) {
    double total = 0.0;
    for (const auto& v : s.values()) total += std::norm(v);
    if (std::abs(s[0]) > 1e-12 * std::sqrt(total))
      throw std::domain_error("negative-order homogeneous norm of a field with nonzero mean");
  }
  const double sum = spectral_weighted_sum(s, [&](double k) {
    if (spec.homogeneous) {
      if (exponent == 0.0) return 1.0;
      return k == 0.0 ? 0.0 : std::pow(k, 2.0 * exponent);
    }
    return std::pow(1.0 + k * k, exponent);
  });
  return std::sqrt(sum);
}

double besov_norm(const Field& f, double s, double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("Besov integrability exponent must be >= 1");
  const Field spec = f.to_spectral();
  const Grid& g = spec.grid();
  const auto mags = wavenumber_magnitudes(g);
  const double kmax = *std::max_element(mags.begin(), mags.end());
  const LittlewoodPaley lp(kmax);

  double acc = 0.0;
  for (int b = 0; b < lp.block_count(); ++b) {
    Field block = spec;
    bool any = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const double w = lp.weight(b, mags[i]);
      block[i] *= w;
      any = any || (w != 0.0 && block[i] != cplx(0.0));
    }
    if (!any) continue;
    const double piece = std::pow(lp.scale(b), s) * lp_norm(block, r);
    acc += piece * piece;
  }
  return std::sqrt(acc);
}

double bracket_weight(double abs_x, double delta) {
  return std::pow(abs_x, 1.0 - delta) + std::pow(abs_x, 1.0 + delta);
}

double weighted_norm(const Field& f, double delta, double q, int sign) {
  if (!(delta > 0.0)) throw std::invalid_argument("weight parameter delta must be positive");
  if (!(q >= 1.0)) throw std::invalid_argument("weight exponent q must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("weight sign must be +1 or -1");
  const Field phys = f.to_physical();
  const Grid& g = phys.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < phys.size(); ++i) {
    const Vec3 x = g.position(i);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (r == 0.0) continue;  // weight vanishes (sign +1) or the sample is dropped (sign -1)
    acc += std::pow(bracket_weight(r, delta), 2.0 * sign / q) * std::norm(phys[i]);
  }
  return std::sqrt(acc * g.cell_volume());
}

double weighted_norm(const radial::RadialProfile& f, double delta, double q, int sign) {
  if (!(delta > 0.0)) throw std::invalid_argument("weight parameter delta must be positive");
  if (!(q >= 1.0)) throw std::invalid_argument("weight exponent q must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("weight sign must be +1 or -1");
  double acc = 0.0;
  for (int k = 0; k < f.samples(); ++k) {
    const double r = f.node(k);
    acc += std::pow(bracket_weight(r, delta), 2.0 * sign / q) * std::norm(f[k]) * r * r;
  }
  return std::sqrt(4.0 * std::numbers::pi * f.spacing() * acc);
}

double space_time_norm(std::span<const double> times, std::span<const double> norms, double q) {
  if (times.empty() || times.size() != norms.size())
    throw std::invalid_argument("space-time norm needs a non-empty, aligned time series");
  if (std::isinf(q)) return *std::max_element(norms.begin(), norms.end());
  if (!(q >= 1.0)) throw std::invalid_argument("time exponent must be >= 1");
  if (times.size() < 2) throw std::invalid_argument("finite time exponent needs at least two snapshots");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    acc += 0.5 * (times[i + 1] - times[i]) * (std::pow(norms[i], q) + std::pow(norms[i + 1], q));
  return std::pow(acc, 1.0 / q);
}

double space_time_norm(const propagator::Trajectory& traj, double q, const SpatialNorm& spatial) {
  if (traj.empty()) throw std::invalid_argument("space-time norm of an empty trajectory");
  std::vector<double> norms;
  norms.reserve(traj.size());
  for (const auto& snap : traj.snapshots) norms.push_back(spatial(snap));
  return space_time_norm(traj.times, norms, q);
}

}  // namespace semirelax::spectral
