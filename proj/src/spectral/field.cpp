#include "semirelax/spectral/field.hpp"

#include <cmath>
#include <stdexcept>

namespace semirelax::spectral {

Field::Field(Grid grid, Representation rep) : grid_(grid), values_(grid.size()), rep_(rep) {}

Field::Field(Grid grid, std::vector<cplx> values, Representation rep)
    : grid_(grid), values_(std::move(values)), rep_(rep) {
  if (values_.size() != grid_.size()) throw std::invalid_argument("field value count does not match grid size");
}

Field Field::sample(const Grid& grid, const std::function<cplx(const Vec3&)>& f) {
  Field out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) out.values_[i] = f(grid.position(i));
  return out;
}

void Field::transform_to(Representation rep) {
  if (rep == rep_) return;
  const double n = grid_.dim();
  if (rep == Representation::spectral) {
    dft_forward(grid_, values_);
    const double scale = grid_.cell_volume();
    for (auto& v : values_) v *= scale;
  } else {
    dft_backward(grid_, values_);
    const double scale = 1.0 / std::pow(grid_.length(), n);
    for (auto& v : values_) v *= scale;
  }
  rep_ = rep;
}

Field Field::in(Representation rep) const {
  Field out = *this;
  out.transform_to(rep);
  return out;
}

Field Field::to_spectral() const { return in(Representation::spectral); }
Field Field::to_physical() const { return in(Representation::physical); }

bool Field::all_finite() const noexcept {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

namespace {
void require_compatible(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
  if (a.representation() != b.representation())
    throw std::invalid_argument("fields are in different representations");
}
}  // namespace

Field& Field::operator+=(const Field& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(cplx scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(cplx s, Field a) { return a *= s; }

cplx inner_product(const Field& f, const Field& g) {
  const Field fp = f.to_physical();
  const Field gp = g.to_physical();
  if (!(fp.grid() == gp.grid())) throw std::invalid_argument("fields live on different grids");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < fp.size(); ++i) acc += fp[i] * std::conj(gp[i]);
  return acc * fp.grid().cell_volume();
}

}  // namespace semirelax::spectral
