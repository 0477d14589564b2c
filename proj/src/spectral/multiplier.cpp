#include "semirelax/spectral/multiplier.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace semirelax::spectral {

void zero_nyquist(Field& f) {
  if (f.is_physical()) throw std::logic_error("zero_nyquist expects a spectral field");
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g.is_nyquist(i)) f[i] = 0.0;
}

Field apply_multiplier(const Field& f, const Symbol& m, SymbolParity parity, std::optional<Representation> out) {
  Field spec = f.to_spectral();
  const Grid& g = spec.grid();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Vec3 xi = g.wavevector(i);
    const cplx v = m(xi);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      const auto idx = g.unflatten(i);
      std::ostringstream msg;
      msg << "multiplier is not finite at mode (";
      for (int a = 0; a < g.dim(); ++a) msg << (a ? ", " : "") << g.mode_number(idx[a]);
      msg << ")";
      throw std::domain_error(msg.str());
    }
    spec[i] *= v;
  }
  if (parity == SymbolParity::general) zero_nyquist(spec);
  spec.transform_to(out.value_or(f.representation()));
  return spec;
}

Field apply_multiplier_table(const Field& f, std::span<const cplx> table, SymbolParity parity,
                             std::optional<Representation> out) {
  if (table.size() != f.size()) throw std::invalid_argument("multiplier table does not match grid size");
  Field spec = f.to_spectral();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= table[i];
  if (parity == SymbolParity::general) zero_nyquist(spec);
  spec.transform_to(out.value_or(f.representation()));
  return spec;
}

Field half_laplacian(const Field& f) {
  return apply_multiplier(
      f, [](const Vec3& xi) { return cplx(std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2])); },
      SymbolParity::even_per_axis);
}

Field partial_derivative(const Field& f, int axis) {
  if (axis < 0 || axis >= f.grid().dim()) throw std::invalid_argument("derivative axis out of range");
  return apply_multiplier(f, [axis](const Vec3& xi) { return cplx(0.0, xi[axis]); }, SymbolParity::general);
}

Field second_derivative(const Field& f, int j, int k) {
  const int n = f.grid().dim();
  if (j < 0 || j >= n || k < 0 || k >= n) throw std::invalid_argument("derivative axis out of range");
  return apply_multiplier(f, [j, k](const Vec3& xi) { return cplx(-xi[j] * xi[k]); },
                          j == k ? SymbolParity::even_per_axis : SymbolParity::general);
}

}  // namespace semirelax::spectral
