#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace semirelax::spectral {

/// Wavevector or position; components beyond the grid dimension are zero.
using Vec3 = std::array<double, 3>;

/// Uniform periodic tensor grid of side `length` with `points` samples per
/// axis. Physical coordinates are centred: x_j = -L/2 + j*dx. Wavenumbers are
/// stored in FFT order (0, 1, ..., N/2-1, -N/2, ..., -1) times 2*pi/L.
class Grid {
 public:
  int dim() const noexcept { return dim_; }
  int points() const noexcept { return points_; }
  double length() const noexcept { return length_; }
  double spacing() const noexcept { return length_ / points_; }
  /// dx^n, the quadrature weight of one physical sample.
  double cell_volume() const noexcept;
  std::size_t size() const noexcept { return size_; }

  double coordinate(int index) const noexcept { return -0.5 * length_ + index * spacing(); }
  double wavenumber(int index) const noexcept;
  /// Signed integer mode number for an FFT-ordered index.
  int mode_number(int index) const noexcept { return index < points_ / 2 ? index : index - points_; }
  std::vector<double> wavenumbers() const;

  /// Per-axis indices of a row-major flat index (axis 0 varies slowest).
  std::array<int, 3> unflatten(std::size_t flat) const noexcept;
  Vec3 position(std::size_t flat) const noexcept;
  Vec3 wavevector(std::size_t flat) const noexcept;
  /// True when any axis of the flat spectral index sits on the unpaired -N/2 mode.
  bool is_nyquist(std::size_t flat) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  friend Grid make_grid(int dim, int points, double length);
  Grid(int dim, int points, double length);

  int dim_ = 1;
  int points_ = 8;
  double length_ = 1.0;
  std::size_t size_ = 8;
};

/// Throws std::invalid_argument unless dim in {1,2,3}, points is a power of
/// two >= 8 and length > 0.
Grid make_grid(int dim, int points, double length);

/// |xi| for every flat spectral index.
std::vector<double> wavenumber_magnitudes(const Grid& grid);

}  // namespace semirelax::spectral
