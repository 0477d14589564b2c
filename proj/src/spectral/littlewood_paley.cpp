#include "semirelax/spectral/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

namespace semirelax::spectral {

namespace {
// Smooth step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) noexcept {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}
}  // namespace

double LittlewoodPaley::cutoff(double x) noexcept { return 1.0 - smooth_step((x - 1.0) * 8.0); }

LittlewoodPaley::LittlewoodPaley(double max_frequency) {
  if (!(max_frequency >= 0.0) || !std::isfinite(max_frequency))
    throw std::invalid_argument("Littlewood-Paley cover needs a finite frequency bound");
  int j = 0;
  while (std::ldexp(1.0, j + 1) < max_frequency) ++j;
  blocks_ = j + 2;
}

double LittlewoodPaley::scale(int block) const noexcept { return block <= 0 ? 1.0 : std::ldexp(1.0, block - 1); }

double LittlewoodPaley::weight(int block, double abs_xi) const noexcept {
  if (block == 0) return cutoff(abs_xi);
  const double s = scale(block);
  return cutoff(abs_xi / (2.0 * s)) - cutoff(abs_xi / s);
}

}  // namespace semirelax::spectral
