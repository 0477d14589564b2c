#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "semirelax/spectral/fft.hpp"
#include "semirelax/spectral/grid.hpp"

namespace semirelax::spectral {

enum class Representation { physical, spectral };

/// Complex samples on a Grid, held either as point values or as Fourier
/// coefficients.
///
/// Normalisation: the forward transform is u_hat(xi_k) = dx^n sum_j u(x_j) e^{-i xi_k . (x_j - x_0)},
/// the inverse is u(x_j) = L^{-n} sum_k u_hat(xi_k) e^{i xi_k . (x_j - x_0)}. With
/// this choice L^{-n} sum_k |u_hat|^2 = dx^n sum_j |u|^2, and the spectral sum
/// approximates the continuum integral of |u_hat|^2 d xi / (2 pi)^n.
class Field {
 public:
  explicit Field(Grid grid, Representation rep = Representation::physical);
  Field(Grid grid, std::vector<cplx> values, Representation rep = Representation::physical);

  /// Samples `f` at every grid point.
  static Field sample(const Grid& grid, const std::function<cplx(const Vec3&)>& f);

  const Grid& grid() const noexcept { return grid_; }
  Representation representation() const noexcept { return rep_; }
  bool is_physical() const noexcept { return rep_ == Representation::physical; }

  std::span<cplx> values() noexcept { return values_; }
  std::span<const cplx> values() const noexcept { return values_; }
  cplx& operator[](std::size_t i) { return values_[i]; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// In-place change of representation; a no-op when already there.
  void transform_to(Representation rep);
  Field to_spectral() const;
  Field to_physical() const;
  Field in(Representation rep) const;

  bool all_finite() const noexcept;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(cplx scale);

 private:
  Grid grid_;
  std::vector<cplx> values_;
  Representation rep_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(cplx s, Field a);

/// <f, g> = integral f conj(g) dx, evaluated on physical samples.
cplx inner_product(const Field& f, const Field& g);

}  // namespace semirelax::spectral
