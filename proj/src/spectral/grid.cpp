#include "semirelax/spectral/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace semirelax::spectral {

Grid::Grid(int dim, int points, double length) : dim_(dim), points_(points), length_(length) {
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(points);
}

double Grid::cell_volume() const noexcept { return std::pow(spacing(), dim_); }

double Grid::wavenumber(int index) const noexcept {
  return 2.0 * std::numbers::pi * mode_number(index) / length_;
}

std::vector<double> Grid::wavenumbers() const {
  std::vector<double> k(points_);
  for (int i = 0; i < points_; ++i) k[i] = wavenumber(i);
  return k;
}

std::array<int, 3> Grid::unflatten(std::size_t flat) const noexcept {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % points_);
    flat /= points_;
  }
  return idx;
}

Vec3 Grid::position(std::size_t flat) const noexcept {
  const auto idx = unflatten(flat);
  Vec3 x{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) x[a] = coordinate(idx[a]);
  return x;
}

Vec3 Grid::wavevector(std::size_t flat) const noexcept {
  const auto idx = unflatten(flat);
  Vec3 k{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) k[a] = wavenumber(idx[a]);
  return k;
}

bool Grid::is_nyquist(std::size_t flat) const noexcept {
  const auto idx = unflatten(flat);
  for (int a = 0; a < dim_; ++a)
    if (idx[a] == points_ / 2) return true;
  return false;
}

Grid make_grid(int dim, int points, double length) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  if (points < 8 || (points & (points - 1)) != 0)
    throw std::invalid_argument("points per axis must be a power of two >= 8, got " + std::to_string(points));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("grid period must be positive and finite");
  return Grid(dim, points, length);
}

std::vector<double> wavenumber_magnitudes(const Grid& grid) {
  const auto k = grid.wavenumbers();
  std::vector<double> out(grid.size());
  const int n = grid.points();
  for (std::size_t f = 0; f < grid.size(); ++f) {
    std::size_t rest = f;
    double sq = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double ka = k[rest % n];
      sq += ka * ka;
      rest /= n;
    }
    out[f] = std::sqrt(sq);
  }
  return out;
}

}  // namespace semirelax::spectral
